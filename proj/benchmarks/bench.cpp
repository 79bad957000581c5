#include <benchmark/benchmark.h>

#include <random>

#include "rootsum/oracle.hpp"
#include "rootsum/poly.hpp"
#include "rootsum/powersums.hpp"
#include "rootsum/squaring.hpp"

namespace {

using namespace rootsum;

Poly random_poly(int degree, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) roots.emplace_back(2.0 * u(rng), 2.0 * u(rng));
  return Poly::from_roots(roots);
}

void bm_poly_eval(benchmark::State& state) {
  Poly p = random_poly(static_cast<int>(state.range(0)), 7);
  Complex x(0.3, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(p, x));
    x += Complex(1e-12, 0.0);
  }
}
BENCHMARK(bm_poly_eval)->Arg(16)->Arg(64)->Arg(256);

void bm_cauchy_sum(benchmark::State& state) {
  Poly p = random_poly(24, 11);
  NewtonOracle oracle = oracle_from_coeffs(p);
  int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_sum(oracle, 0, q));
}
BENCHMARK(bm_cauchy_sum)->Arg(32)->Arg(128)->Arg(512);

void bm_dlg_step(benchmark::State& state) {
  Poly p = random_poly(static_cast<int>(state.range(0)), 13);
  SquaringState s = init_dlg(p);
  for (auto _ : state) benchmark::DoNotOptimize(dlg_step(s, true));
}
BENCHMARK(bm_dlg_step)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
