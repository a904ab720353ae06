#pragma once

#include <functional>
#include <memory>
#include <string>

#include "umbra/rational.hpp"

namespace umbra {

// A generalized factorial system: the sequence a(n) that defines the
// generalized derivative D x^n = a(n) x^(n-1) and the factorials
// [n]! = a(1) a(2) ... a(n), [0]! = 1.
//
// Copies share one memoized factorial table; the table is safe for
// concurrent readers.
class FactorialSystem {
 public:
  static FactorialSystem classical();   // a(n) = n
  static FactorialSystem divided();     // a(n) = 1
  static FactorialSystem hyperbolic();  // a(n) = 2n(2n-1)
  // a(n) = 1 + q + ... + q^(n-1); degrades to the classical system at q = 1
  // instead of dividing by zero.
  static FactorialSystem gaussian(const Rational& q);
  static FactorialSystem custom(std::string name,
                                std::function<Rational(int)> a);

  const std::string& name() const;
  bool is_classical() const;

  Rational a(int n) const;          // n >= 1; ZeroFactorIllegal on a(n) = 0
  Rational factorial(int n) const;  // [n]!, memoized
  // [n]! / ([k]! [n-k]!); OutOfRange unless 0 <= k <= n.
  Rational binomial(int n, int k) const;

  // Same predefined kind (gaussian additionally compares q); custom systems
  // are the same only when they share an instance.
  friend bool same_system(const FactorialSystem& x, const FactorialSystem& y);

 private:
  struct Impl;
  explicit FactorialSystem(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

}  // namespace umbra
