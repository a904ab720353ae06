#include "umbra/operators.hpp"
#include "umbra/sequences.hpp"

namespace umbra {

OperatorExpansion expand_operator(const Operator& t, const Operator& q,
                                  int order) {
  if (order < 1) fail(Errc::OutOfRange, "expansion order must be >= 1");
  if (!t.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant, "only shift-invariant operators expand");
  }
  if (!q.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant, "expansion base must be shift-invariant");
  }
  if (!same_system(t.system(), q.system())) {
    fail(Errc::MixedFactorialSystems,
         t.system().name() + " vs " + q.system().name());
  }
  const FactorialSystem& fs = t.system();
  // basic_sequence re-checks that q is a delta operator (NotDelta).
  const PolySequence basic = basic_sequence(q, order - 1);
  std::vector<Rational> coeffs(order);
  for (int k = 0; k < order; ++k) {
    coeffs[k] = t.apply(basic[k]).eval(Rational(0)) / fs.factorial(k);
  }
  return OperatorExpansion{q, std::move(coeffs), order};
}

Polynomial apply(const OperatorExpansion& e, const Polynomial& p) {
  Polynomial acc = p * e.coeffs[0];
  Polynomial cur = p;
  for (int k = 1; k < e.order; ++k) {
    cur = e.base.apply(cur);
    if (cur.is_zero()) break;
    if (!e.coeffs[k].is_zero()) acc += cur * e.coeffs[k];
  }
  return acc;
}

KMExpansion km_expansion(const Operator& t, int order,
                         const FactorialSystem& fs) {
  if (order < 1) fail(Errc::OutOfRange, "expansion order must be >= 1");
  if (!fs.is_classical()) {
    fail(Errc::NonClassicalFactorial,
         "this expansion is defined for the classical system");
  }
  if (t.is_shift_invariant() && !t.system().is_classical()) {
    fail(Errc::NonClassicalFactorial,
         "operator lives in a non-classical system");
  }
  std::vector<Polynomial> b;
  b.reserve(order);
  Rational n_factorial(1);
  for (int n = 0; n < order; ++n) {
    if (n > 0) n_factorial *= Rational(n);
    Polynomial r = t.apply(Polynomial::monomial(n));
    Rational falling(1);  // (n)_k = n (n-1) ... (n-k+1)
    for (int k = 0; k < n; ++k) {
      if (k > 0) falling *= Rational(n - k + 1);
      if (!b[k].is_zero()) {
        r -= b[k] * Polynomial::monomial(n - k, falling);
      }
    }
    b.push_back(r * (Rational(1) / n_factorial));
  }
  return KMExpansion{std::move(b), order};
}

Polynomial apply(const KMExpansion& e, const Polynomial& p) {
  const FactorialSystem classical = FactorialSystem::classical();
  Polynomial acc;
  Polynomial cur = p;
  for (int k = 0; k < e.order; ++k) {
    if (k > 0) cur = generalized_derivative(cur, classical);
    if (cur.is_zero()) break;
    if (!e.coeff_polys[k].is_zero()) acc += e.coeff_polys[k] * cur;
  }
  return acc;
}

}  // namespace umbra
