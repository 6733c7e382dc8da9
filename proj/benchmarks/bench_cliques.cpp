#include <benchmark/benchmark.h>

#include <numeric>

#include "csd/graph.hpp"
#include "csd/rng.hpp"

namespace {

csd::BoolMatrix random_graph(int n, double edge_prob, std::uint64_t seed) {
  csd::BoolMatrix adj(n, n);
  csd::SplitMix64 rng(seed);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.next_unit() < edge_prob) {
        adj.set(a, b, true);
        adj.set(b, a, true);
      }
  return adj;
}

void BM_maximal_cliques(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double prob = static_cast<double>(state.range(1)) / 10.0;
  const csd::BoolMatrix adj = random_graph(n, prob, 7);
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(csd::maximal_cliques(verts, adj));
}

}  // namespace

BENCHMARK(BM_maximal_cliques)
    ->ArgsProduct({{16, 32, 64, 75}, {2, 5, 8}})
    ->Unit(benchmark::kMicrosecond);
