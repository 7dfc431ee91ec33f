#include <benchmark/benchmark.h>

#include "lsf/seifert.hpp"

using namespace lsf;
using seifert::SeifertFamily;

namespace {

Rational r(long long n, long long d) { return Rational(Int(n), Int(d)); }

void BM_IsLSpace(benchmark::State& state) {
  std::vector<std::optional<Rational>> raw{r(1, 2), r(2, 3), r(4, 5), r(5, 7)};
  const auto f = seifert::normalize(Int(-2), raw);
  for (auto _ : state) benchmark::DoNotOptimize(seifert::is_lspace(f));
}

void BM_FamilySweep(benchmark::State& state) {
  SeifertFamily fam{Int(-2), {r(1, 2), r(2, 3), r(3, 4)}, Int(3), Int(1), Int(2), Int(1)};
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(seifert::classify_family(fam, -n, n, 1));
}

void BM_FamilySweepParallel(benchmark::State& state) {
  SeifertFamily fam{Int(-2), {r(1, 2), r(2, 3), r(3, 4)}, Int(3), Int(1), Int(2), Int(1)};
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(seifert::classify_family(fam, -n, n, 4));
}

}  // namespace

BENCHMARK(BM_IsLSpace);
BENCHMARK(BM_FamilySweep)->Arg(1000);
BENCHMARK(BM_FamilySweepParallel)->Arg(1000);
