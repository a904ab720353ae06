#include "umbra/operators.hpp"

namespace umbra {

namespace {

Rational int_factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

Operator generated(const std::function<Rational(int)>& gen,
                   const FactorialSystem& fs, int order, std::string name,
                   std::string expr) {
  Series initial = Series::from_generator(gen, order);
  auto recipe = [gen](int k) { return Series::from_generator(gen, k); };
  return Operator::shift_invariant(std::move(initial), fs, std::move(recipe),
                                   std::move(name), std::move(expr));
}

Polynomial integral_from_zero(const Polynomial& p) { return antiderivative(p); }

// p(x) -> integral of p over [x, x+1].
Polynomial unit_interval_integral(const Polynomial& p) {
  const Polynomial prim = antiderivative(p);
  return prim.shifted(Rational(1)) - prim;
}

}  // namespace

Operator catalog_operator(const std::string& name,
                          const std::map<std::string, Rational>& params,
                          const FactorialSystem& fs, int order) {
  if (order < 1) fail(Errc::OutOfRange, "order must be positive");
  auto param_a = [&]() -> Rational {
    auto it = params.find("a");
    if (it == params.end()) {
      fail(Errc::MissingParam, "operator '" + name + "' needs parameter a");
    }
    return it->second;
  };

  if (name == "d") {
    return generated([](int k) { return Rational(k == 1 ? 1 : 0); }, fs, order,
                     "d", "d");
  }
  if (name == "identity") {
    return generated([](int k) { return Rational(k == 0 ? 1 : 0); }, fs, order,
                     "identity", "1");
  }
  if (name == "delta") {
    return generated(
        [](int k) {
          return k < 1 ? Rational(0) : Rational(1) / int_factorial(k);
        },
        fs, order, "delta", "exp(d) - 1");
  }
  if (name == "nabla") {
    return generated(
        [](int k) {
          if (k < 1) return Rational(0);
          return Rational(k % 2 == 1 ? 1 : -1) / int_factorial(k);
        },
        fs, order, "nabla", "1 - exp(-d)");
  }
  if (name == "bernoulli") {
    return generated([](int k) { return Rational(1) / int_factorial(k + 1); },
                     fs, order, "bernoulli", "(exp(d) - 1)/d");
  }
  if (name == "shift") {
    const Rational a = param_a();
    return generated([a](int k) { return pow(a, k) / int_factorial(k); }, fs,
                     order, "shift(" + a.str() + ")",
                     "exp(" + a.str() + "*d)");
  }
  if (name == "abel") {
    const Rational a = param_a();
    return generated(
        [a](int k) {
          return k < 1 ? Rational(0) : pow(a, k - 1) / int_factorial(k - 1);
        },
        fs, order, "abel(" + a.str() + ")", "d*exp(" + a.str() + "*d)");
  }
  if (name == "integral0") {
    return Operator::explicit_action(integral_from_zero, "integral0");
  }
  if (name == "bernoulliInt") {
    return Operator::explicit_action(unit_interval_integral, "bernoulliInt");
  }
  fail(Errc::UnknownOperator, "unknown operator '" + name + "'");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"d", "shift-invariant", "d"},
      {"delta", "shift-invariant", "exp(d) - 1"},
      {"nabla", "shift-invariant", "1 - exp(-d)"},
      {"shift(a)", "shift-invariant", "exp(a*d)"},
      {"bernoulli", "shift-invariant", "(exp(d) - 1)/d"},
      {"abel(a)", "shift-invariant", "d*exp(a*d)"},
      {"identity", "shift-invariant", "1"},
      {"integral0", "explicit-action", "p(x) -> integral_0^x p(t) dt"},
      {"bernoulliInt", "explicit-action", "p(x) -> integral_x^(x+1) p(t) dt"},
  };
  return entries;
}

}  // namespace umbra
