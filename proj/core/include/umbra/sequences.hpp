#pragma once

#include <string>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/polynomial.hpp"

namespace umbra {

// Triangular polynomial sequence p_0..p_N: deg p_n = n for every n (so p_0 is
// a nonzero constant). Enforced at construction.
class PolySequence {
 public:
  explicit PolySequence(std::vector<Polynomial> polys, std::string meta = "");

  static PolySequence powers(int n);            // x^0 .. x^n
  static PolySequence lower_factorials(int n);  // (x)_0 .. (x)_n

  int size() const { return static_cast<int>(polys_.size()); }
  const Polynomial& operator[](int n) const { return polys_[n]; }
  const std::vector<Polynomial>& polys() const { return polys_; }
  const std::string& meta() const { return meta_; }

  friend bool operator==(const PolySequence& a, const PolySequence& b) {
    return a.polys_ == b.polys_;  // meta is provenance, not identity
  }

 private:
  std::vector<Polynomial> polys_;
  std::string meta_;
};

// The basic sequence of the delta operator q: the unique triangular sequence
// with Q p_n = a(n) p_(n-1), p_n(0) = 0 for n > 0, p_0 = 1, computed by exact
// triangular solve degree by degree.
PolySequence basic_sequence(const Operator& q, int n);

// Sheffer sequence s_n = S^(-1) p_n for invertible s and the basic sequence
// p of q (shared factorial system).
PolySequence sheffer_sequence(const Operator& s, const Operator& q, int n);

// Cross-sequence p_n^(lambda) = S^lambda p_n (classical system only).
PolySequence cross_sequence(const Operator& s, const Rational& lambda,
                            const Operator& q, int n);

// Steffensen sequence: the diagonal lambda = n of the cross-sequence family.
PolySequence steffensen_sequence(const Operator& s, const Operator& q, int n);

// Coefficients e_k = (Q^k p)(0) / [k]! with p = sum_k e_k basic_k.
std::vector<Rational> basic_expansion(const Polynomial& p, const Operator& q);

// Coefficients e_k = (S Q^k p)(0) / [k]! with p = sum_k e_k sheffer_k.
std::vector<Rational> sheffer_expansion(const Polynomial& p, const Operator& s,
                                        const Operator& q);

using ScalarMatrix = std::vector<std::vector<Rational>>;

// Lower-triangular c with A_n = sum_(k<=n) c[n][k] B_k, by back-substitution.
ScalarMatrix connection_constants(const PolySequence& a, const PolySequence& b);

// Umbral composition (P o R)_n = sum_k a_nk R_k where P_n = sum_k a_nk x^k.
PolySequence umbral_compose(const PolySequence& p, const PolySequence& r);

// The unique R with umbral_compose(P, R) = powers (and conversely).
PolySequence umbral_inverse(const PolySequence& p);

}  // namespace umbra
