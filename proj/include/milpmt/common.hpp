#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace milpmt {

inline constexpr double kTolFeas = 1e-6;
inline constexpr double kTolInt = 1e-6;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// All error conditions carry a short machine-checkable code plus a message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

inline void require(bool cond, const char* code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Shortest round-trip decimal rendering; every on-disk float goes through
// this so rewrites are byte-stable.
inline std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  if (s == "inf") return kInf;
  if (s == "-inf") return -kInf;
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail("ParseError", "bad float token '" + std::string(s) + "'");
  return v;
}

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail("ParseError", "bad int token '" + std::string(s) + "'");
  return v;
}

}  // namespace milpmt
