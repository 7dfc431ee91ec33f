#include <benchmark/benchmark.h>

#include "lsf/homology.hpp"

using namespace lsf;
using homology::IntMatrix;

namespace {

IntMatrix random_matrix(int n, unsigned long long seed) {
  IntMatrix m(n, n);
  unsigned long long s = seed;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = static_cast<long long>((s >> 16) % 19) - 9;
    }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(homology::smith_normal_form(m));
}

void BM_RationalChain(benchmark::State& state) {
  for (auto _ : state)
    for (long long p = 2; p <= state.range(0); ++p)
      benchmark::DoNotOptimize(homology::rational_chain(Rational(Int(p), Int(p - 1))));
}

void BM_PseudoseiferterSweep(benchmark::State& state) {
  for (auto _ : state) {
    Int acc = 0;
    for (long long n = 1; n <= state.range(0); ++n)
      acc += homology::pseudoseiferter_det(3, -2, 5, 4, 3, Int(n));
    benchmark::DoNotOptimize(acc);
  }
}

}  // namespace

BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(8);
BENCHMARK(BM_RationalChain)->Arg(200);
BENCHMARK(BM_PseudoseiferterSweep)->Arg(100);
