#include "umbra/factorial.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace umbra {

namespace {
enum class Kind { classical, divided, hyperbolic, gaussian, custom };
}

struct FactorialSystem::Impl {
  Impl(Kind k, std::string n, std::function<Rational(int)> fn, Rational qq)
      : kind(k), name(std::move(n)), a(std::move(fn)), q(std::move(qq)) {
    fact.push_back(Rational(1));  // [0]! = 1
  }

  Kind kind;
  std::string name;
  std::function<Rational(int)> a;
  Rational q;  // gaussian only

  std::mutex mu;
  std::vector<Rational> fact;  // fact[n] = [n]!
};

FactorialSystem::FactorialSystem(std::shared_ptr<Impl> impl)
    : impl_(std::move(impl)) {}

FactorialSystem FactorialSystem::classical() {
  return FactorialSystem(std::make_shared<Impl>(
      Kind::classical, "classical",
      [](int n) { return Rational(n); }, Rational(0)));
}

FactorialSystem FactorialSystem::divided() {
  return FactorialSystem(std::make_shared<Impl>(
      Kind::divided, "divided", [](int) { return Rational(1); }, Rational(0)));
}

FactorialSystem FactorialSystem::hyperbolic() {
  return FactorialSystem(std::make_shared<Impl>(
      Kind::hyperbolic, "hyperbolic",
      [](int n) { return Rational(2L * n * (2L * n - 1)); }, Rational(0)));
}

FactorialSystem FactorialSystem::gaussian(const Rational& q) {
  // Sum form of (q^n - 1)/(q - 1), well defined at q = 1.
  auto a = [q](int n) {
    Rational s;
    Rational p(1);
    for (int i = 0; i < n; ++i) {
      s += p;
      p *= q;
    }
    return s;
  };
  return FactorialSystem(std::make_shared<Impl>(
      Kind::gaussian, "gaussian(" + q.str() + ")", std::move(a), q));
}

FactorialSystem FactorialSystem::custom(std::string name,
                                        std::function<Rational(int)> a) {
  return FactorialSystem(std::make_shared<Impl>(
      Kind::custom, std::move(name), std::move(a), Rational(0)));
}

const std::string& FactorialSystem::name() const { return impl_->name; }

bool FactorialSystem::is_classical() const {
  return impl_->kind == Kind::classical;
}

Rational FactorialSystem::a(int n) const {
  if (n < 1) fail(Errc::OutOfRange, "a(n) is defined for n >= 1");
  Rational v = impl_->a(n);
  if (v.is_zero()) {
    fail(Errc::ZeroFactorIllegal,
         "a(" + std::to_string(n) + ") = 0 in system " + impl_->name);
  }
  return v;
}

Rational FactorialSystem::factorial(int n) const {
  if (n < 0) fail(Errc::OutOfRange, "factorial of negative index");
  std::lock_guard<std::mutex> lock(impl_->mu);
  while (static_cast<int>(impl_->fact.size()) <= n) {
    const int m = static_cast<int>(impl_->fact.size());
    Rational am = impl_->a(m);
    if (am.is_zero()) {
      fail(Errc::ZeroFactorIllegal,
           "a(" + std::to_string(m) + ") = 0 in system " + impl_->name);
    }
    impl_->fact.push_back(impl_->fact.back() * am);
  }
  return impl_->fact[n];
}

Rational FactorialSystem::binomial(int n, int k) const {
  if (k < 0 || k > n) {
    fail(Errc::OutOfRange, "binomial requires 0 <= k <= n");
  }
  return factorial(n) / (factorial(k) * factorial(n - k));
}

bool same_system(const FactorialSystem& x, const FactorialSystem& y) {
  if (x.impl_ == y.impl_) return true;
  if (x.impl_->kind != y.impl_->kind) return false;
  if (x.impl_->kind == Kind::custom) return false;
  if (x.impl_->kind == Kind::gaussian) return x.impl_->q == y.impl_->q;
  return true;
}

}  // namespace umbra
