#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace milpmt {

// Deterministic xoshiro-style generator. std:: distributions are
// implementation-defined, so every draw used for artifacts goes through
// this class to keep outputs byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix(seed)) {
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
  }

  std::uint64_t next_u64() {
    // xorshift64*
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  // Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    // multiply-shift; bias is negligible for n << 2^64 and identical everywhere
    unsigned __int128 m = (unsigned __int128)next_u64() * n;
    return (std::uint64_t)(m >> 64);
  }

  // Derive an independent stream, e.g. one per work item.
  std::uint64_t derive(std::uint64_t index) const {
    return splitmix(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = (std::size_t)next_below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace milpmt
