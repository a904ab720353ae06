#include "umbra/series.hpp"

#include <algorithm>
#include <utility>

namespace umbra {

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) fail(Errc::OutOfRange, "series order must be positive");
}

Series Series::zero(int order) {
  if (order < 1) fail(Errc::OutOfRange, "series order must be positive");
  return Series(std::vector<Rational>(order));
}

Series Series::constant(const Rational& c, int order) {
  Series s = zero(order);
  s.c_[0] = c;
  return s;
}

Series Series::identity(int order) {
  Series s = zero(order);
  if (order >= 2) s.c_[1] = Rational(1);
  return s;
}

Series Series::from_generator(const std::function<Rational(int)>& gen,
                              int order) {
  Series s = zero(order);
  for (int k = 0; k < order; ++k) s.c_[k] = gen(k);
  return s;
}

int Series::valuation() const {
  for (int k = 0; k < order(); ++k) {
    if (!c_[k].is_zero()) return k;
  }
  return order();
}

const Rational& Series::operator[](int k) const {
  if (k < 0 || k >= order()) {
    fail(Errc::OutOfRange, "series coefficient index beyond known order");
  }
  return c_[k];
}

Series Series::truncated(int new_order) const {
  if (new_order < 1 || new_order > order()) {
    fail(Errc::OutOfRange, "bad truncation order");
  }
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order));
}

Series Series::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return Series(std::move(c));
}

Series operator+(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Rational> c(n);
  for (int k = 0; k < n; ++k) c[k] = f.c_[k] + g.c_[k];
  return Series(std::move(c));
}

Series operator-(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Rational> c(n);
  for (int k = 0; k < n; ++k) c[k] = f.c_[k] - g.c_[k];
  return Series(std::move(c));
}

Series operator*(const Series& f, const Series& g) {
  const int n = std::min(f.order(), g.order());
  std::vector<Rational> c(n);
  for (int i = 0; i < n; ++i) {
    if (f.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) c[i + j] += f.c_[i] * g.c_[j];
  }
  return Series(std::move(c));
}

Series operator*(const Rational& c, Series f) {
  for (auto& x : f.c_) x = c * x;
  return f;
}

Series reciprocal(const Series& f) {
  if (f[0].is_zero()) {
    fail(Errc::NotInvertible, "series with zero constant term has no reciprocal");
  }
  const int n = f.order();
  std::vector<Rational> r(n);
  r[0] = Rational(1) / f[0];
  for (int k = 1; k < n; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j) s += f[j] * r[k - j];
    r[k] = -s / f[0];
  }
  return Series(std::move(r));
}

Series operator/(const Series& f, const Series& g) {
  const int v = g.valuation();
  if (v >= g.order()) {
    fail(Errc::DivisionByHigherValuation,
         "divisor has no known nonzero coefficient");
  }
  if (f.valuation() < v) {
    fail(Errc::DivisionByHigherValuation,
         "divisor valuation exceeds dividend valuation");
  }
  const int n = std::min(f.order(), g.order()) - v;
  if (n < 1) {
    fail(Errc::InsufficientOrder, "division leaves no determined coefficients");
  }
  std::vector<Rational> fs(f.coeffs().begin() + v, f.coeffs().begin() + v + n);
  std::vector<Rational> gs(g.coeffs().begin() + v, g.coeffs().begin() + v + n);
  return Series(std::move(fs)) * reciprocal(Series(std::move(gs)));
}

Series compose(const Series& f, const Series& g) {
  if (!g[0].is_zero()) {
    fail(Errc::NonzeroConstantTerm,
         "substituted series must have zero constant term");
  }
  const int n = std::min(f.order(), g.order());
  const Series gn = g.truncated(n);
  Series acc = Series::constant(f[n - 1], n);
  for (int k = n - 2; k >= 0; --k) {
    acc = acc * gn + Series::constant(f[k], n);
  }
  return acc;
}

Series revert(const Series& f) {
  const int n = f.order();
  if (n < 2 || !f[0].is_zero() || f[1].is_zero()) {
    fail(Errc::NotReversible,
         "reversion requires valuation exactly 1 (f(0) = 0, f'(0) != 0)");
  }
  std::vector<Rational> g(n);
  g[1] = Rational(1) / f[1];
  // pw[k][j] = [t^j] g(t)^k, filled degree by degree; for k >= 2 the entry at
  // degree m only involves coefficients of g below m, so it is final when the
  // solve reaches m.
  std::vector<std::vector<Rational>> pw(n, std::vector<Rational>(n));
  if (n > 1) pw[1][1] = g[1];
  for (int m = 2; m < n; ++m) {
    for (int k = 2; k <= m; ++k) {
      Rational s;
      for (int j = k - 1; j < m; ++j) {
        if (!pw[k - 1][j].is_zero()) s += pw[k - 1][j] * g[m - j];
      }
      pw[k][m] = s;
    }
    Rational rhs;
    for (int k = 2; k <= m; ++k) rhs += f[k] * pw[k][m];
    g[m] = -rhs / f[1];
    pw[1][m] = g[m];
  }
  return Series(std::move(g));
}

Series exp(const Series& f) {
  if (!f[0].is_zero()) {
    fail(Errc::NonzeroConstantTerm,
         "exp needs zero constant term (result would be irrational)");
  }
  const int n = f.order();
  std::vector<Rational> e(n);
  e[0] = Rational(1);
  for (int k = 1; k < n; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j) s += Rational(j) * f[j] * e[k - j];
    e[k] = s / Rational(k);
  }
  return Series(std::move(e));
}

Series log(const Series& f) {
  if (!f[0].is_one()) {
    fail(Errc::ConstantTermNotOne,
         "log needs constant term 1 (result would be irrational)");
  }
  const int n = f.order();
  std::vector<Rational> l(n);
  for (int k = 1; k < n; ++k) {
    Rational s;
    for (int j = 1; j < k; ++j) s += f[j] * Rational(k - j) * l[k - j];
    l[k] = f[k] - s / Rational(k);
  }
  return Series(std::move(l));
}

Series pow(const Series& f, long e) {
  if (e < 0) return pow(reciprocal(f), -e);
  Series acc = Series::constant(Rational(1), f.order());
  Series base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

}  // namespace umbra
