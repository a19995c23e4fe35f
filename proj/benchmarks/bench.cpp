#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pierichain/verify.hpp"

using namespace pierichain;

namespace {

void BM_pieri_dim(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto weights = all_weights_up_to(m, 4);
  for (auto _ : state) {
    int total = 0;
    for (const auto& lambda : weights)
      for (const auto& eta : weights) total += pieri_dim(lambda, 3, eta);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(weights.size() * weights.size()));
}
BENCHMARK(BM_pieri_dim)->Arg(3)->Arg(4)->Arg(5);

void BM_decompose_recompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(99);
  std::vector<InterlacingPattern> patterns;
  for (int i = 0; i < 256; ++i) {
    std::vector<Int> long_row(static_cast<std::size_t>(m));
    Int upper = 50;
    for (auto& x : long_row) {
      x = static_cast<Int>(rng() % static_cast<std::uint64_t>(upper + 1));
      upper = x;
    }
    std::vector<Int> short_row(static_cast<std::size_t>(m - 1));
    for (int j = 0; j + 1 < m; ++j)
      short_row[static_cast<std::size_t>(j)] =
          long_row[static_cast<std::size_t>(j + 1)] +
          static_cast<Int>(rng() % static_cast<std::uint64_t>(
                                       long_row[static_cast<std::size_t>(j)] -
                                       long_row[static_cast<std::size_t>(j + 1)] + 1));
    patterns.emplace_back(Orientation::normal, long_row, short_row);
  }
  for (auto _ : state)
    for (const auto& p : patterns) {
      auto gens = decompose(p);
      benchmark::DoNotOptimize(recompose(gens, m, Orientation::normal));
    }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_decompose_recompose)->Arg(3)->Arg(6);

void BM_enumerate_X(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_X(m, 3, 3));
}
BENCHMARK(BM_enumerate_X)->Arg(3)->Arg(4)->Arg(5);

void BM_swap_relations(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(swap_relations(m, 3, 2, true));
}
BENCHMARK(BM_swap_relations)->Arg(2)->Arg(3)->Arg(4);

void BM_dim_conformal_blocks(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const std::vector<Int> r{3, 2, 1}, s{2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(dim_conformal_blocks(m, r, s, 4));
}
BENCHMARK(BM_dim_conformal_blocks)->Arg(3)->Arg(4)->Arg(5);

void BM_hilbert_level(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_level(m, 2, 2, 3));
}
BENCHMARK(BM_hilbert_level)->Arg(2)->Arg(3);

void BM_markov_check(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(markov_check(2, 2, 2, true, 3));
}
BENCHMARK(BM_markov_check);

}  // namespace

BENCHMARK_MAIN();
