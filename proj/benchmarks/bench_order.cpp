#include <benchmark/benchmark.h>

#include "supermod/lattice_gen.hpp"
#include "supermod/poset.hpp"
#include "supermod/topology.hpp"

namespace {

using namespace supermod;

void BM_ProductJoin(benchmark::State& state) {
  const std::vector<Poset> factors(static_cast<std::size_t>(state.range(0)), Poset::chain(4));
  const Poset p = product_poset(factors);
  Elem a = 0;
  for (auto _ : state) {
    const Elem b = (a * 7 + 3) % p.size();
    benchmark::DoNotOptimize(join(p, a, b));
    a = (a + 1) % p.size();
  }
}
BENCHMARK(BM_ProductJoin)->DenseRange(2, 4);

void BM_SubcompleteExhaustive(benchmark::State& state) {
  const Poset c = Poset::chain(static_cast<std::size_t>(state.range(0)));
  Subset all(c.size());
  for (Elem e = 0; e < c.size(); ++e) all[e] = e;
  for (auto _ : state) benchmark::DoNotOptimize(is_subcomplete(c, all).ok);
}
BENCHMARK(BM_SubcompleteExhaustive)->DenseRange(6, 12, 2);

void BM_LatticeCatalogue(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_LatticeCatalogue)->DenseRange(5, 7);

void BM_IntervalTopology(benchmark::State& state) {
  Rng rng(1);
  const Poset p = random_lattice(rng, 8);
  const std::vector<Poset> factors(static_cast<std::size_t>(state.range(0)), p);
  const Poset prod = product_poset(factors);
  for (auto _ : state) benchmark::DoNotOptimize(interval_topology(prod).size());
}
BENCHMARK(BM_IntervalTopology)->DenseRange(1, 2);

void BM_ProductLemma(benchmark::State& state) {
  const std::vector<Poset> factors(static_cast<std::size_t>(state.range(0)), Poset::chain(3));
  for (auto _ : state) benchmark::DoNotOptimize(check_product_interval_lemma(factors));
}
BENCHMARK(BM_ProductLemma)->DenseRange(1, 3);

}  // namespace
