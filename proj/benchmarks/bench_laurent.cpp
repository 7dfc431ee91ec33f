#include <benchmark/benchmark.h>

#include "lsf/laurent.hpp"
#include "lsf/twistalex.hpp"

using namespace lsf;

namespace {

LinkPoly2 l7a5() {
  const LinkPoly2 f1 = LinkPoly2::from_terms({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
  const LinkPoly2 f2 = LinkPoly2::from_terms({{1, 1, 1}, {1, 0, -1}, {0, 1, -1}});
  return f1 * f2;
}

void BM_PolyProductPower(benchmark::State& state) {
  const LinkPoly2 base = l7a5();
  for (auto _ : state) {
    LinkPoly2 acc = LinkPoly2::one();
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) acc = acc * base;
    benchmark::DoNotOptimize(acc);
  }
}

void BM_TwistKnot(benchmark::State& state) {
  const LinkPoly2 delta2 = l7a5();
  for (auto _ : state) {
    for (std::int64_t n = 1; n <= state.range(0); ++n)
      benchmark::DoNotOptimize(twistalex::twist_knot(delta2, 1, n));
  }
}

void BM_GenusBoundSweep(benchmark::State& state) {
  const LinkPoly2 delta2 = l7a5();
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n <= state.range(0); ++n)
      acc += twistalex::genus_lower_bound(delta2, 1, n);
    benchmark::DoNotOptimize(acc);
  }
}

}  // namespace

BENCHMARK(BM_PolyProductPower)->Arg(8)->Arg(16);
BENCHMARK(BM_TwistKnot)->Arg(50)->Arg(200);
BENCHMARK(BM_GenusBoundSweep)->Arg(100);
