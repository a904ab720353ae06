#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "umbra/errors.hpp"

namespace umbra {

// Exact arbitrary-precision rational, the coefficient field for the whole
// library. Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit so that `p * 3` etc. read naturally
  Rational(long num, long den);

  // Accepts "p", "+p", "-p" or "p/q" with decimal digits; anything else is a
  // ParseError. "1/0" is rejected.
  static Rational parse(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool fits_long() const;
  long as_long() const;  // requires is_integer() && fits_long()

  Rational abs() const;
  std::string str() const { return v_.get_str(); }  // "p" or "p/q"

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // DivisionByZero if o is zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  const mpq_class& raw() const { return v_; }

  // base^exponent; negative exponents require a nonzero base.
  friend Rational pow(const Rational& base, long exponent);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace umbra
