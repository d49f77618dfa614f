#include <benchmark/benchmark.h>

#include "schubert/balanced.hpp"
#include "schubert/crystals.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/splitting.hpp"

using namespace schubert;

namespace {

Permutation longestOf(const benchmark::State& state) {
  return Permutation::longest(static_cast<int>(state.range(0)));
}

// A permutation with many rc-graphs: 1 followed by the reversed tail.
Permutation wideOf(const benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> w{1};
  for (int k = n; k >= 2; --k) w.push_back(k);
  return Permutation(w);
}

void BM_RcGraphEnumeration(benchmark::State& state) {
  const Permutation w = wideOf(state);
  std::size_t count = 0;
  for (auto _ : state) {
    RcGraphEnumerator it(w);
    count = 0;
    while (it.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_RcGraphEnumeration)->DenseRange(4, 7);

void BM_LadderClosure(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(ladderClosure(w));
}
BENCHMARK(BM_LadderClosure)->DenseRange(4, 6);

void BM_SchubertSum(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(schubertSum(w));
}
BENCHMARK(BM_SchubertSum)->DenseRange(4, 7);

void BM_DividedDifferenceOracle(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(schubertOracle(w));
}
BENCHMARK(BM_DividedDifferenceOracle)->DenseRange(4, 7);

void BM_KohnertClosure(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(kohnertClosure(w));
}
BENCHMARK(BM_KohnertClosure)->DenseRange(4, 6);

void BM_BalancedLabelings(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(allBalancedLabelings(w));
}
BENCHMARK(BM_BalancedLabelings)->DenseRange(4, 6);

void BM_CrystalPartition(benchmark::State& state) {
  const Permutation w = wideOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(crystalPartition(w));
}
BENCHMARK(BM_CrystalPartition)->DenseRange(4, 6);

void BM_SplitCoefficients(benchmark::State& state) {
  const Permutation w = longestOf(state);
  const auto d = w.descents();
  const CutPoints cuts(d.begin(), d.end());
  for (auto _ : state) benchmark::DoNotOptimize(splitCoefficients(w, cuts));
}
BENCHMARK(BM_SplitCoefficients)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
