#include "umbra/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace umbra {

namespace {
const Rational kZero;
}

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::monomial(int degree, Rational coeff) {
  if (degree < 0) fail(Errc::OutOfRange, "monomial degree must be >= 0");
  if (coeff.is_zero()) return Polynomial();
  std::vector<Rational> c(degree + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) fail(Errc::OutOfRange, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc;
  for (int i = degree(); i >= 0; --i) acc = acc * at + coeffs_[i];
  return acc;
}

Polynomial Polynomial::shifted(const Rational& a) const {
  // Horner in (x + a): acc <- acc*(x + a) + c_i from the top coefficient down.
  Polynomial acc;
  for (int i = degree(); i >= 0; --i) {
    std::vector<Rational> next(acc.coeffs_.size() + 1);
    for (std::size_t j = 0; j < acc.coeffs_.size(); ++j) {
      next[j + 1] += acc.coeffs_[j];
      next[j] += a * acc.coeffs_[j];
    }
    next[0] += coeffs_[i];
    acc = Polynomial(std::move(next));
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  Polynomial p;
  p.coeffs_ = std::move(c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial antiderivative(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> c(p.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    c[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i) + 1);
  }
  return Polynomial(std::move(c));
}

}  // namespace umbra
