#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace owabp {

/// Exact rational number over 64-bit integers.
///
/// Values are kept normalized: gcd(|num|, den) == 1 and den > 0. All
/// arithmetic runs through 128-bit intermediates and throws
/// std::overflow_error if a reduced result no longer fits into 64 bits.
/// Comparisons never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // integers convert implicitly
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
  static Rational parse(const std::string& text);

  /// Renders "p" when integral, "p/q" otherwise. parse(str()) round-trips.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  void assign(i128 num, i128 den);
  static Rational from_i128(i128 num, i128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace owabp
