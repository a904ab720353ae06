#include "umbra/operators.hpp"

#include <mutex>
#include <utility>

namespace umbra {

struct Operator::ShiftInvariantData {
  ShiftInvariantData(Series ind, FactorialSystem f, Recipe r, std::string n,
                     std::string e)
      : fs(std::move(f)),
        recipe(std::move(r)),
        name(std::move(n)),
        expr(std::move(e)),
        indicator(std::move(ind)) {}

  FactorialSystem fs;
  Recipe recipe;
  std::string name;
  std::string expr;

  mutable std::mutex mu;
  mutable Series indicator;  // best known truncation
};

struct Operator::ExplicitData {
  Action action;
  std::string name;
};

Operator Operator::shift_invariant(Series indicator, FactorialSystem fs,
                                   Recipe recipe, std::string name,
                                   std::string expr) {
  Operator op;
  op.si_ = std::make_shared<ShiftInvariantData>(
      std::move(indicator), std::move(fs), std::move(recipe), std::move(name),
      std::move(expr));
  return op;
}

Operator Operator::explicit_action(Action action, std::string name) {
  Operator op;
  op.ex_ = std::make_shared<ExplicitData>(
      ExplicitData{std::move(action), std::move(name)});
  return op;
}

const FactorialSystem& Operator::system() const {
  if (!si_) {
    fail(Errc::NotShiftInvariant,
         "explicit-action operator has no factorial system");
  }
  return si_->fs;
}

bool Operator::has_recipe() const { return si_ && si_->recipe != nullptr; }

int Operator::stored_order() const {
  if (!si_) fail(Errc::NotShiftInvariant, "operator has no indicator");
  std::lock_guard<std::mutex> lock(si_->mu);
  return si_->indicator.order();
}

const std::string& Operator::name() const {
  return si_ ? si_->name : ex_->name;
}

const std::string& Operator::expr() const {
  static const std::string empty;
  return si_ ? si_->expr : empty;
}

Series Operator::indicator(int min_order) const {
  if (!si_) fail(Errc::NotShiftInvariant, "operator has no indicator");
  if (min_order < 1) fail(Errc::OutOfRange, "order must be positive");
  std::lock_guard<std::mutex> lock(si_->mu);
  if (si_->indicator.order() >= min_order) return si_->indicator;
  if (!si_->recipe) {
    fail(Errc::InsufficientOrder,
         "indicator of '" + (si_->name.empty() ? std::string("<series>") : si_->name) +
             "' is fixed at order " + std::to_string(si_->indicator.order()) +
             ", need " + std::to_string(min_order));
  }
  // Re-elaboration may come back short (division shrinks the guaranteed
  // order), so raise the request until it covers the deficit.
  int request = min_order;
  for (int tries = 0; tries < 64; ++tries) {
    Series s = si_->recipe(request);
    if (s.order() >= min_order) {
      si_->indicator = std::move(s);
      return si_->indicator;
    }
    request += min_order - s.order();
  }
  fail(Errc::InsufficientOrder,
       "recipe cannot reach order " + std::to_string(min_order));
}

Polynomial generalized_derivative(const Polynomial& p,
                                  const FactorialSystem& fs) {
  if (p.degree() < 1) return Polynomial();
  std::vector<Rational> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) {
    c[i - 1] = p.coeff(i) * fs.a(i);
  }
  return Polynomial(std::move(c));
}

Polynomial Operator::apply(const Polynomial& p) const {
  if (ex_) return ex_->action(p);
  if (p.is_zero()) return p;
  const int deg = p.degree();
  const Series ind = indicator(deg + 1);
  Polynomial acc = p * ind[0];
  Polynomial cur = p;
  for (int k = 1; k <= deg; ++k) {
    cur = generalized_derivative(cur, si_->fs);
    if (cur.is_zero()) break;
    if (!ind[k].is_zero()) acc += cur * ind[k];
  }
  return acc;
}

const char* to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::delta: return "delta";
    case OperatorClass::invertible: return "invertible";
    case OperatorClass::neither: return "neither";
  }
  return "?";
}

OperatorClass classify(const Operator& op) {
  if (!op.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant,
         "classification is defined for shift-invariant operators only");
  }
  Series ind = op.indicator(op.has_recipe() ? 2 : 1);
  int v = ind.valuation();
  if (v == ind.order()) {
    // All known coefficients vanish; probe deeper before settling.
    if (op.has_recipe()) {
      ind = op.indicator(ind.order() + 8);
      v = ind.valuation();
    }
    if (v == ind.order()) {
      if (ind.order() < 2) {
        fail(Errc::InsufficientOrder,
             "cannot classify an order-1 indicator with zero constant term");
      }
      return OperatorClass::neither;
    }
  }
  if (v == 0) return OperatorClass::invertible;
  if (v == 1) return OperatorClass::delta;
  return OperatorClass::neither;
}

namespace {

void require_algebra_operands(const Operator& a, const Operator& b) {
  if (!a.is_shift_invariant() || !b.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant,
         "operator algebra is defined for shift-invariant operators");
  }
  if (!same_system(a.system(), b.system())) {
    fail(Errc::MixedFactorialSystems,
         a.system().name() + " vs " + b.system().name());
  }
}

int combined_order(const Operator& a, const Operator& b) {
  return std::min(a.stored_order(), b.stored_order());
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

Operator add(const Operator& a, const Operator& b) {
  require_algebra_operands(a, b);
  const int n = combined_order(a, b);
  auto recipe = [a, b](int k) { return a.indicator(k) + b.indicator(k); };
  return Operator::shift_invariant(
      a.indicator(n) + b.indicator(n), a.system(), recipe,
      wrap(a.name() + " + " + b.name()), wrap(a.expr() + " + " + b.expr()));
}

Operator mul(const Operator& a, const Operator& b) {
  require_algebra_operands(a, b);
  const int n = combined_order(a, b);
  auto recipe = [a, b](int k) { return a.indicator(k) * b.indicator(k); };
  return Operator::shift_invariant(
      a.indicator(n) * b.indicator(n), a.system(), recipe,
      wrap(a.name() + "*" + b.name()), wrap(a.expr() + "*" + b.expr()));
}

Operator inverse(const Operator& a) {
  if (!a.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant, "only shift-invariant operators invert");
  }
  const Series ind = a.indicator(1);
  if (ind[0].is_zero()) {
    fail(Errc::NotInvertible,
         "indicator of '" + a.name() + "' has zero constant term");
  }
  auto recipe = [a](int k) { return reciprocal(a.indicator(k)); };
  return Operator::shift_invariant(reciprocal(ind), a.system(), recipe,
                                   "inverse(" + a.name() + ")",
                                   "inverse(" + a.expr() + ")");
}

Operator pow(const Operator& a, const Rational& exponent) {
  if (!a.is_shift_invariant()) {
    fail(Errc::NotShiftInvariant, "only shift-invariant operators have powers");
  }
  const std::string name = wrap(a.name()) + "^" + exponent.str();
  const std::string expr = wrap(a.expr()) + "^" + exponent.str();
  if (exponent.is_integer() && exponent.fits_long()) {
    const long e = exponent.as_long();
    if (e < 0 && a.indicator(1)[0].is_zero()) {
      fail(Errc::NotInvertible,
           "negative power of an operator with zero constant term");
    }
    auto recipe = [a, e](int k) { return pow(a.indicator(k), e); };
    return Operator::shift_invariant(pow(a.indicator(1), e), a.system(),
                                     recipe, name, expr);
  }
  if (!a.indicator(1)[0].is_one()) {
    fail(Errc::FractionalPowerNeedsUnitConstant,
         "fractional power requires indicator constant term 1");
  }
  auto recipe = [a, exponent](int k) {
    return exp(exponent * log(a.indicator(k)));
  };
  return Operator::shift_invariant(recipe(a.indicator(1).order()), a.system(),
                                   recipe, name, expr);
}

}  // namespace umbra
