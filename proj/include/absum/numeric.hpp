#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "absum/errors.hpp"

namespace absum {

// et_off: every operation materializes a value, keeping generic code simple.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int ipow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

inline uint64_t upow_checked(uint64_t base, unsigned exp, uint64_t limit) {
  // base^exp, or `limit` if the result would exceed it.
  uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit;
    r *= base;
  }
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, errc::internal, "rational with zero denominator");
  return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_string(const Rat& r) {
  if (rat_is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = int_gcd(a, b);
  Int r = (a / g) * b;
  return r < 0 ? -r : r;
}

// Degree sentinel for the zero polynomial: below every genuine degree, so
// comparisons like e < d need no special cases.
constexpr int kDegNegInf = INT32_MIN;

inline std::string deg_string(int d) { return d == kDegNegInf ? "-inf" : std::to_string(d); }

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace absum
