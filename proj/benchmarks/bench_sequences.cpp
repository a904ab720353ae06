#include <benchmark/benchmark.h>

#include "umbra/sequences.hpp"

using namespace umbra;

namespace {

void BM_BasicSequenceDelta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Operator delta = catalog_operator("delta", {}, FactorialSystem::classical(), n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(basic_sequence(delta, n));
  }
}
BENCHMARK(BM_BasicSequenceDelta)->Arg(8)->Arg(12)->Arg(16);

void BM_ApplyDelta(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const Operator delta = catalog_operator("delta", {}, FactorialSystem::classical(), deg + 1);
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = Rational(i + 1, 3);
  const Polynomial p(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta.apply(p));
  }
}
BENCHMARK(BM_ApplyDelta)->Arg(8)->Arg(16)->Arg(32);

void BM_ConnectionConstants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PolySequence a = PolySequence::powers(n);
  const PolySequence b = PolySequence::lower_factorials(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(connection_constants(a, b));
  }
}
BENCHMARK(BM_ConnectionConstants)->Arg(8)->Arg(12)->Arg(16);

void BM_ExpandOperator(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Operator bern = catalog_operator("bernoulli", {}, FactorialSystem::classical(), m);
  const Operator delta = catalog_operator("delta", {}, FactorialSystem::classical(), m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand_operator(bern, delta, m));
  }
}
BENCHMARK(BM_ExpandOperator)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
