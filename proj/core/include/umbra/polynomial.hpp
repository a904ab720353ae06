#pragma once

#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

// Dense univariate polynomial over Rational. coeffs()[i] is the coefficient
// of x^i; the trailing entry is always nonzero and the zero polynomial has an
// empty coefficient list (degree() == -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int degree, Rational coeff = Rational(1));
  static Polynomial variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int i) const;  // zero outside [0, degree]
  const Rational& leading() const;     // requires !is_zero()

  // Horner evaluation, exact.
  Rational eval(const Rational& at) const;
  // p(x + a), exact.
  Polynomial shifted(const Rational& a) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p) {
    return p *= c;
  }
  friend Polynomial operator*(Polynomial p, const Rational& c) {
    return p *= c;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// The antiderivative with constant term 0.
Polynomial antiderivative(const Polynomial& p);

}  // namespace umbra
