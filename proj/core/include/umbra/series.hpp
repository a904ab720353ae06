#pragma once

#include <functional>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

// Truncated formal power series over Rational: exactly order() coefficients
// are known, i.e. the series is known mod t^order. order() >= 1 always.
//
// Binary operations truncate to the smaller order; division additionally
// shrinks the result by the valuation of the divisor, so only coefficients
// that are actually determined by the inputs are ever reported.
class Series {
 public:
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int order);
  static Series constant(const Rational& c, int order);
  static Series identity(int order);  // the series t
  static Series from_generator(const std::function<Rational(int)>& gen,
                               int order);

  int order() const { return static_cast<int>(c_.size()); }
  // Index of the first nonzero known coefficient; order() when all vanish.
  int valuation() const;
  const Rational& operator[](int k) const;  // requires 0 <= k < order
  const std::vector<Rational>& coeffs() const { return c_; }
  Series truncated(int new_order) const;  // requires 1 <= new_order <= order

  Series operator-() const;
  friend Series operator+(const Series& f, const Series& g);
  friend Series operator-(const Series& f, const Series& g);
  friend Series operator*(const Series& f, const Series& g);
  // Requires valuation(g) <= valuation(f) and a nonzero leading known
  // coefficient of g; result is known mod t^(min(order) - valuation(g)).
  friend Series operator/(const Series& f, const Series& g);

  friend Series operator*(const Rational& c, Series f);

  friend bool operator==(const Series& a, const Series& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Series& a, const Series& b) {
    return !(a == b);
  }

 private:
  std::vector<Rational> c_;
};

// f(g(t)); requires g(0) = 0. Result order is the smaller input order.
Series compose(const Series& f, const Series& g);

// Compositional inverse: the g with f(g(t)) = t mod t^order. Requires
// valuation(f) = 1 exactly.
Series revert(const Series& f);

// exp requires f(0) = 0; log requires f(0) = 1. Mutually inverse to the
// truncation order.
Series exp(const Series& f);
Series log(const Series& f);

// 1/f; requires f(0) != 0 (order-preserving special case of division).
Series reciprocal(const Series& f);

// f^e for integer e; negative e goes through reciprocal.
Series pow(const Series& f, long e);

}  // namespace umbra
