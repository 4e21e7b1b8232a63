#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace uqp {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string ratStr(const BigRat& r) { return r.str(); }

inline bool isInt(const BigRat& r) { return denominator(r) == 1; }

inline long ratToLong(const BigRat& r) {
  if (!isInt(r)) throw Error("ratToLong: not an integer: " + ratStr(r));
  return static_cast<long>(numerator(r));
}

inline BigRat factorialRat(int64_t n) {
  BigInt f = 1;
  for (int64_t i = 2; i <= n; i++) f *= i;
  return BigRat(f);
}

/// Half-integer, stored doubled. Half{3} means 3/2.
struct Half {
  int64_t d = 0;
  Half() = default;
  explicit Half(int64_t doubled) : d(doubled) {}
  static Half whole(int64_t n) { return Half(2 * n); }
  static Half fromRat(const BigRat& r) {
    BigRat twice = r * 2;
    if (!isInt(twice)) throw Error("Half::fromRat: denominator must divide 2, got " + ratStr(r));
    return Half(static_cast<int64_t>(numerator(twice)));
  }
  BigRat rat() const { return BigRat(d, 2); }
  bool isWhole() const { return d % 2 == 0; }
  friend Half operator+(Half a, Half b) { return Half(a.d + b.d); }
  friend Half operator-(Half a, Half b) { return Half(a.d - b.d); }
  friend Half operator-(Half a) { return Half(-a.d); }
  friend Half operator*(Half a, int64_t n) { return Half(a.d * n); }
  friend bool operator==(Half a, Half b) { return a.d == b.d; }
  friend bool operator!=(Half a, Half b) { return a.d != b.d; }
  friend bool operator<(Half a, Half b) { return a.d < b.d; }
  friend bool operator<=(Half a, Half b) { return a.d <= b.d; }
  friend bool operator>(Half a, Half b) { return a.d > b.d; }
  friend bool operator>=(Half a, Half b) { return a.d >= b.d; }
  std::string str() const {
    if (d % 2 == 0) return std::to_string(d / 2);
    return std::to_string(d) + "/2";
  }
};

}  // namespace uqp
