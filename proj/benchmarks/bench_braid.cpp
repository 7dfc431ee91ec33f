#include <benchmark/benchmark.h>

#include "lsf/braid.hpp"

using namespace lsf;

namespace {

void BM_BurauTorus(benchmark::State& state) {
  const auto w = braid::torus_braid(state.range(0) + 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid::burau_alexander(w));
}

void BM_AxisPoly(benchmark::State& state) {
  const auto w = braid::staircase_braid(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(braid::axis_link_poly(w));
}

void BM_CensusGenus(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(braid::enumerate_genus(state.range(0), 1));
}

void BM_CensusGenusParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(braid::enumerate_genus(state.range(0), 4));
}

}  // namespace

BENCHMARK(BM_BurauTorus)->Arg(6)->Arg(8);
BENCHMARK(BM_AxisPoly)->Arg(3)->Arg(5);
BENCHMARK(BM_CensusGenus)->Arg(2);
BENCHMARK(BM_CensusGenusParallel)->Arg(2);
