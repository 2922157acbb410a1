#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace milpmt {

// FNV-1a, used for artifact/buffer fingerprints in manifests and tests.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

inline std::uint64_t fnv1a(const std::vector<double>& v) {
  return fnv1a(v.data(), v.size() * sizeof(double));
}

std::uint64_t hash_file(const std::string& path);  // throws on missing file

std::string hex64(std::uint64_t h);

}  // namespace milpmt
