#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "umbra/factorial.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/series.hpp"

namespace umbra {

// Series truncation order used when nothing else is requested.
inline constexpr int kDefaultOrder = 16;

// A linear operator on polynomials. Two variants:
//
//  * shift-invariant: determined by an indicator series f and a factorial
//    system; the operator is f(D) for the generalized derivative
//    D x^n = a(n) x^(n-1). An optional recipe re-derives the indicator at a
//    higher order on demand; operators built from a bare fixed series raise
//    InsufficientOrder instead of guessing coefficients.
//
//  * explicit action: an arbitrary caller-supplied map Poly -> Poly, assumed
//    linear (the test suite spot-checks linearity; it cannot be decided).
//
// Operators are immutable values; copies share the indicator cache, which is
// safe for concurrent readers.
class Operator {
 public:
  using Action = std::function<Polynomial(const Polynomial&)>;
  using Recipe = std::function<Series(int)>;

  static Operator shift_invariant(Series indicator, FactorialSystem fs,
                                  Recipe recipe = nullptr,
                                  std::string name = "",
                                  std::string expr = "");
  static Operator explicit_action(Action action, std::string name = "");

  bool is_shift_invariant() const { return si_ != nullptr; }
  // Factorial system of a shift-invariant operator; NotShiftInvariant
  // otherwise.
  const FactorialSystem& system() const;
  bool has_recipe() const;
  int stored_order() const;
  // Indicator with at least min_order known coefficients, extending through
  // the recipe when needed.
  Series indicator(int min_order) const;

  // Short display name ("delta") and canonical expression ("exp(d) - 1").
  const std::string& name() const;
  const std::string& expr() const;

  // Apply to a polynomial. Shift-invariant: sum_k c_k D^k p (a finite sum);
  // requires indicator order > deg p, possibly via the recipe.
  Polynomial apply(const Polynomial& p) const;

 private:
  struct ShiftInvariantData;
  struct ExplicitData;
  Operator() = default;
  std::shared_ptr<ShiftInvariantData> si_;
  std::shared_ptr<ExplicitData> ex_;
};

// D p under the given system: x^n -> a(n) x^(n-1) termwise.
Polynomial generalized_derivative(const Polynomial& p,
                                  const FactorialSystem& fs);

enum class OperatorClass { delta, invertible, neither };
const char* to_string(OperatorClass c);

// delta: indicator valuation exactly 1 (op(x) is a nonzero constant);
// invertible: nonzero constant term; neither otherwise. Only defined for
// shift-invariant operators.
OperatorClass classify(const Operator& op);

// Operator algebra on shift-invariant operators over one factorial system.
// mul is composition (shift-invariant operators commute). pow accepts any
// integer exponent, and any rational exponent when the indicator has unit
// constant term.
Operator add(const Operator& a, const Operator& b);
Operator mul(const Operator& a, const Operator& b);
Operator inverse(const Operator& a);
Operator pow(const Operator& a, const Rational& exponent);

// Named operator catalog:
//   d, delta, nabla, shift(a), bernoulli, abel(a), identity   shift-invariant
//   integral0, bernoulliInt                                   explicit action
Operator catalog_operator(const std::string& name,
                          const std::map<std::string, Rational>& params = {},
                          const FactorialSystem& fs = FactorialSystem::classical(),
                          int order = kDefaultOrder);

struct CatalogEntry {
  std::string name;  // as accepted by catalog_operator
  std::string kind;  // "shift-invariant" or "explicit-action"
  std::string expr;  // indicator expression or action description
};
const std::vector<CatalogEntry>& catalog_entries();

// Expansion of a shift-invariant operator T in powers of a delta operator Q:
// T = sum_k coeffs[k] Q^k with coeffs[k] = (T p_k)(0) / [k]! for Q's basic
// sequence p.
struct OperatorExpansion {
  Operator base;  // Q
  std::vector<Rational> coeffs;
  int order;
};
OperatorExpansion expand_operator(const Operator& t, const Operator& q,
                                  int order);
// sum_k coeffs[k] Q^k applied to p (truncated reconstruction).
Polynomial apply(const OperatorExpansion& e, const Polynomial& p);

// Expansion of an arbitrary linear operator as sum_k b_k(x) d^k with
// polynomial coefficients (classical system only), via the triangular
// recurrence b_n = (T x^n - sum_{k<n} b_k (n)_k x^(n-k)) / n!.
struct KMExpansion {
  std::vector<Polynomial> coeff_polys;
  int order;
};
KMExpansion km_expansion(const Operator& t, int order,
                         const FactorialSystem& fs = FactorialSystem::classical());
Polynomial apply(const KMExpansion& e, const Polynomial& p);

}  // namespace umbra
