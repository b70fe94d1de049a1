#include <benchmark/benchmark.h>

#include "k3corr/criteria_x.hpp"
#include "k3corr/divisorial.hpp"
#include "k3corr/pell.hpp"

namespace {

void BM_solve_bounded(benchmark::State& state) {
  const k3corr::Int q_bound = state.range(0);
  for (auto _ : state) {
    auto sols = k3corr::pell::solve_bounded(17, 8, q_bound);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_solve_bounded)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_decide_iso(benchmark::State& state) {
  const auto L = k3corr::make_x_lattice(2, 2, 17, 1);
  const k3corr::Int q_bound = state.range(0);
  for (auto _ : state) {
    auto verdict = k3corr::criteria_x::decide_iso_general_x(L, q_bound);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_decide_iso)->Arg(100)->Arg(1000)->Arg(10000);

void BM_div_catalogue(benchmark::State& state) {
  const auto shape = k3corr::mukai_split(6, 10);
  const k3corr::divisorial::CatalogueLimits limits{2, state.range(0)};
  for (auto _ : state) {
    auto cat = k3corr::divisorial::div_catalogue(shape, limits);
    benchmark::DoNotOptimize(cat);
  }
}
BENCHMARK(BM_div_catalogue)->Arg(1000)->Arg(10000);

void BM_fundamental_unit(benchmark::State& state) {
  const k3corr::Int d = state.range(0);
  for (auto _ : state) {
    auto fu = k3corr::pell::fundamental_unit(d);
    benchmark::DoNotOptimize(fu);
  }
}
BENCHMARK(BM_fundamental_unit)->Arg(61)->Arg(661)->Arg(9949);

}  // namespace

BENCHMARK_MAIN();
