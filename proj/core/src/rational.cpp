#include "umbra/rational.hpp"

#include <cctype>
#include <ostream>

namespace umbra {

Rational::Rational(long num, long den) : v_(0) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t num_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) {
    throw ParseError(Errc::SyntaxError, "expected digits", i);
  }
  const std::string num_str(text.substr(num_begin, i - num_begin));
  std::string den_str = "1";
  if (i < n && text[i] == '/') {
    ++i;
    const std::size_t den_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) {
      throw ParseError(Errc::SyntaxError, "expected digits after '/'", i);
    }
    den_str = std::string(text.substr(den_begin, i - den_begin));
  }
  if (i != n) {
    throw ParseError(Errc::SyntaxError, "trailing characters in rational", i);
  }
  mpz_class den(den_str);
  if (den == 0) {
    throw ParseError(Errc::SyntaxError, "zero denominator", num_begin);
  }
  mpq_class v(mpz_class(num_str), den);
  v.canonicalize();
  if (negative) v = -v;
  return Rational(std::move(v));
}

bool Rational::fits_long() const {
  return is_integer() && v_.get_num().fits_slong_p();
}

long Rational::as_long() const {
  if (!fits_long()) {
    fail(Errc::OutOfRange, "rational " + str() + " is not a machine integer");
  }
  return v_.get_num().get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  const bool invert = exponent < 0;
  if (invert && base.is_zero()) {
    fail(Errc::DivisionByZero, "negative power of zero");
  }
  const unsigned long e =
      invert ? -static_cast<unsigned long>(exponent) : exponent;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), e);
  if (invert) swap(num, den);
  mpq_class v(num, den);
  v.canonicalize();  // moves the sign back into the numerator
  return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace umbra
