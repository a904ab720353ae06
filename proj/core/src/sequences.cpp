#include "umbra/sequences.hpp"

#include <utility>

namespace umbra {

PolySequence::PolySequence(std::vector<Polynomial> polys, std::string meta)
    : polys_(std::move(polys)), meta_(std::move(meta)) {
  if (polys_.empty()) {
    fail(Errc::NotTriangular, "empty polynomial sequence");
  }
  for (std::size_t n = 0; n < polys_.size(); ++n) {
    if (polys_[n].degree() != static_cast<int>(n)) {
      fail(Errc::NotTriangular,
           "entry " + std::to_string(n) + " has degree " +
               std::to_string(polys_[n].degree()) + ", expected " +
               std::to_string(n));
    }
  }
}

PolySequence PolySequence::powers(int n) {
  if (n < 0) fail(Errc::OutOfRange, "sequence length must be >= 1");
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  for (int k = 0; k <= n; ++k) p.push_back(Polynomial::monomial(k));
  return PolySequence(std::move(p), "powers");
}

PolySequence PolySequence::lower_factorials(int n) {
  if (n < 0) fail(Errc::OutOfRange, "sequence length must be >= 1");
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  Polynomial cur(Rational(1));
  p.push_back(cur);
  for (int k = 0; k < n; ++k) {
    cur = cur * Polynomial(std::vector<Rational>{Rational(-k), Rational(1)});
    p.push_back(cur);
  }
  return PolySequence(std::move(p), "lower factorials");
}

PolySequence basic_sequence(const Operator& q, int n) {
  if (n < 0) fail(Errc::OutOfRange, "sequence length must be >= 1");
  if (classify(q) != OperatorClass::delta) {
    fail(Errc::NotDelta,
         "basic sequences exist for delta operators only ('" + q.name() + "')");
  }
  const FactorialSystem& fs = q.system();

  // Q applied to the monomial basis; q x^j has degree exactly j - 1.
  std::vector<Polynomial> qx(n + 1);
  for (int j = 1; j <= n; ++j) qx[j] = q.apply(Polynomial::monomial(j));

  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial(Rational(1)));
  for (int m = 1; m <= n; ++m) {
    const Polynomial target = p[m - 1] * fs.a(m);
    // Solve sum_j u_j (Q x^j) = target with p_m(0) = 0, top degree down.
    std::vector<Rational> u(m + 1);
    for (int i = m - 1; i >= 0; --i) {
      Rational s = target.coeff(i);
      for (int j = i + 2; j <= m; ++j) s -= u[j] * qx[j].coeff(i);
      u[i + 1] = s / qx[i + 1].coeff(i);
    }
    p.push_back(Polynomial(std::move(u)));
  }
  return PolySequence(std::move(p), "basic(" + q.name() + ")");
}

PolySequence sheffer_sequence(const Operator& s, const Operator& q, int n) {
  if (!same_system(s.system(), q.system())) {
    fail(Errc::MixedFactorialSystems,
         s.system().name() + " vs " + q.system().name());
  }
  const Operator s_inv = inverse(s);  // NotInvertible when S is not
  const PolySequence basic = basic_sequence(q, n);
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (int m = 0; m <= n; ++m) out.push_back(s_inv.apply(basic[m]));
  return PolySequence(std::move(out),
                      "sheffer(" + s.name() + ", " + q.name() + ")");
}

namespace {

void require_classical(const Operator& op, const char* what) {
  if (!op.system().is_classical()) {
    fail(Errc::NonClassicalFactorial,
         std::string(what) + " is defined for the classical system");
  }
}

}  // namespace

PolySequence cross_sequence(const Operator& s, const Rational& lambda,
                            const Operator& q, int n) {
  require_classical(q, "cross-sequence");
  if (!same_system(s.system(), q.system())) {
    fail(Errc::MixedFactorialSystems,
         s.system().name() + " vs " + q.system().name());
  }
  const Operator s_pow = pow(s, lambda);
  const PolySequence basic = basic_sequence(q, n);
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (int m = 0; m <= n; ++m) out.push_back(s_pow.apply(basic[m]));
  return PolySequence(std::move(out), "cross(" + s.name() + "^" +
                                          lambda.str() + ", " + q.name() + ")");
}

PolySequence steffensen_sequence(const Operator& s, const Operator& q, int n) {
  require_classical(q, "Steffensen sequence");
  if (!same_system(s.system(), q.system())) {
    fail(Errc::MixedFactorialSystems,
         s.system().name() + " vs " + q.system().name());
  }
  const PolySequence basic = basic_sequence(q, n);
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  for (int m = 0; m <= n; ++m) {
    out.push_back(pow(s, Rational(m)).apply(basic[m]));
  }
  return PolySequence(std::move(out),
                      "steffensen(" + s.name() + ", " + q.name() + ")");
}

std::vector<Rational> basic_expansion(const Polynomial& p, const Operator& q) {
  if (classify(q) != OperatorClass::delta) {
    fail(Errc::NotDelta, "expansion base must be a delta operator");
  }
  const FactorialSystem& fs = q.system();
  std::vector<Rational> e;
  Polynomial r = p;
  for (int k = 0; k <= p.degree(); ++k) {
    e.push_back(r.eval(Rational(0)) / fs.factorial(k));
    r = q.apply(r);
  }
  return e;
}

std::vector<Rational> sheffer_expansion(const Polynomial& p, const Operator& s,
                                        const Operator& q) {
  if (classify(q) != OperatorClass::delta) {
    fail(Errc::NotDelta, "expansion base must be a delta operator");
  }
  if (classify(s) != OperatorClass::invertible) {
    fail(Errc::NotInvertible, "Sheffer expansion needs an invertible S");
  }
  if (!same_system(s.system(), q.system())) {
    fail(Errc::MixedFactorialSystems,
         s.system().name() + " vs " + q.system().name());
  }
  const FactorialSystem& fs = q.system();
  std::vector<Rational> e;
  Polynomial r = p;
  for (int k = 0; k <= p.degree(); ++k) {
    e.push_back(s.apply(r).eval(Rational(0)) / fs.factorial(k));
    r = q.apply(r);
  }
  return e;
}

ScalarMatrix connection_constants(const PolySequence& a,
                                  const PolySequence& b) {
  if (a.size() != b.size()) {
    fail(Errc::LengthMismatch, "sequences have different lengths");
  }
  ScalarMatrix c(a.size());
  for (int n = 0; n < a.size(); ++n) {
    c[n].resize(n + 1);
    Polynomial r = a[n];
    for (int k = n; k >= 0; --k) {
      const Rational coef = r.coeff(k) / b[k].leading();
      c[n][k] = coef;
      if (!coef.is_zero()) r -= b[k] * coef;
    }
  }
  return c;
}

PolySequence umbral_compose(const PolySequence& p, const PolySequence& r) {
  if (p.size() != r.size()) {
    fail(Errc::LengthMismatch, "sequences have different lengths");
  }
  std::vector<Polynomial> out;
  out.reserve(p.size());
  for (int n = 0; n < p.size(); ++n) {
    Polynomial acc;
    for (int k = 0; k <= n; ++k) {
      const Rational& coef = p[n].coeff(k);
      if (!coef.is_zero()) acc += r[k] * coef;
    }
    out.push_back(std::move(acc));
  }
  return PolySequence(std::move(out),
                      "uc(" + p.meta() + ", " + r.meta() + ")");
}

PolySequence umbral_inverse(const PolySequence& p) {
  const int n = p.size();
  // Rows of the inverse of the coefficient matrix A[m][k] = [x^k] p_m.
  std::vector<std::vector<Rational>> inv(n);
  for (int m = 0; m < n; ++m) {
    inv[m].resize(m + 1);
    inv[m][m] = Rational(1) / p[m].leading();
    for (int j = m - 1; j >= 0; --j) {
      Rational s;
      for (int k = j + 1; k <= m; ++k) s += inv[m][k] * p[k].coeff(j);
      inv[m][j] = -s / p[j].leading();
    }
  }
  std::vector<Polynomial> out;
  out.reserve(n);
  for (int m = 0; m < n; ++m) out.push_back(Polynomial(std::move(inv[m])));
  return PolySequence(std::move(out), "ui(" + p.meta() + ")");
}

}  // namespace umbra
