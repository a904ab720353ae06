#include <benchmark/benchmark.h>

#include "umbra/series.hpp"

using namespace umbra;

namespace {

Series sample_series(int order, int salt) {
  std::vector<Rational> c(order);
  for (int k = 0; k < order; ++k) {
    c[k] = Rational((k * 7 + salt) % 19 - 9, (k % 5) + 1);
  }
  return Series(std::move(c));
}

Series sample_delta(int order) {
  Series s = sample_series(order, 3);
  std::vector<Rational> c = s.coeffs();
  c[0] = Rational(0);
  c[1] = Rational(2, 3);
  return Series(std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series f = sample_series(n, 1);
  const Series g = sample_series(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesRevert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series f = sample_delta(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(revert(f));
  }
}
BENCHMARK(BM_SeriesRevert)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesExp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Series f = sample_series(n, 5);
  std::vector<Rational> c = f.coeffs();
  c[0] = Rational(0);
  f = Series(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp(f));
  }
}
BENCHMARK(BM_SeriesExp)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesDiv(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series f = sample_series(n, 1);
  Series g = sample_series(n, 4);
  std::vector<Rational> c = g.coeffs();
  c[0] = Rational(1);
  g = Series(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f / g);
  }
}
BENCHMARK(BM_SeriesDiv)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
