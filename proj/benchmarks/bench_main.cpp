#include "cadiv/continued_fraction.hpp"
#include "cadiv/enumeration.hpp"
#include "cadiv/germ.hpp"
#include "cadiv/pell.hpp"

#include <benchmark/benchmark.h>

using namespace cadiv;

namespace {

void BM_HjRoundTrip(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      benchmark::DoNotOptimize(hj_recognize(hj_expand(n, a)));
    }
  }
}
BENCHMARK(BM_HjRoundTrip)->Arg(100)->Arg(1000);

void BM_PellSolve(benchmark::State& state) {
  const PellProblem p{Int(1), Int(8), Int(4)};  // k = 12, d = 12
  for (auto _ : state) benchmark::DoNotOptimize(pell_solve(p, state.range(0)));
}
BENCHMARK(BM_PellSolve)->Arg(1000)->Arg(10000);

// Chain of -2/-3/-4 curves with a (-1)-curve on each end.
void BM_AnalyzeGerm(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  WeightedDualGraph g;
  g.add_vertex("C1", -1, true);
  for (std::size_t i = 0; i < len; ++i) g.add_vertex("E" + std::to_string(i + 1), -2 - static_cast<std::int64_t>(i % 3));
  g.add_vertex("C2", -1, true);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) g.add_edge(i, i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_germ(g));
}
BENCHMARK(BM_AnalyzeGerm)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateSemistable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_semistable(state.range(0), kDefaultPellBound));
}
BENCHMARK(BM_EnumerateSemistable)->Arg(3)->Arg(12);

void BM_EnumerateNormal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_normal_nss(state.range(0), 4, 0));
}
BENCHMARK(BM_EnumerateNormal)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
