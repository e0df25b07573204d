#include <benchmark/benchmark.h>

#include "supermod/equilibria.hpp"
#include "supermod/random_game.hpp"

namespace {

using namespace supermod;

// Product games with `players` players on chains of length 4.
Game product_game(std::size_t players) {
  RandomGameSpec spec;
  spec.min_players = players;
  spec.max_players = players;
  spec.min_chain = 4;
  spec.max_chain = 4;
  return random_supermodular_game(spec, 11);
}

void BM_EquilibriaBruteforce(benchmark::State& state) {
  const Game g = product_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equilibria_bruteforce(g).profiles.size());
}
BENCHMARK(BM_EquilibriaBruteforce)->DenseRange(2, 4);

void BM_IterateGreatest(benchmark::State& state) {
  const Game g = product_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_extremal(g, Direction::kGreatest).profile);
}
BENCHMARK(BM_IterateGreatest)->DenseRange(2, 4);

void BM_Validate(benchmark::State& state) {
  const Game g = product_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_supermodular(g).certified());
}
BENCHMARK(BM_Validate)->DenseRange(2, 4);

}  // namespace
