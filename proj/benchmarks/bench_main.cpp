#include <benchmark/benchmark.h>

#include <random>

#include "respgraph/census.hpp"

using namespace rg;

namespace {

Game random_game(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> payoff(-100, 100);
  Game::Table u1(rows), u2(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      u1[r].push_back(payoff(rng));
      u2[r].push_back(payoff(rng));
    }
  }
  return Game(std::move(u1), std::move(u2));
}

void BM_BuildResponseGraph(benchmark::State& state) {
  std::mt19937 rng(1);
  Game g = random_game(rng, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_response_graph(g));
  }
}
BENCHMARK(BM_BuildResponseGraph)->Arg(3)->Arg(4)->Arg(8);

void BM_CanonicalForm3x3(benchmark::State& state) {
  std::mt19937 rng(2);
  ResponseGraph g = build_response_graph(random_game(rng, 3, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm3x3);

void BM_Classify3x3(benchmark::State& state) {
  std::mt19937 rng(3);
  Game g = random_game(rng, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(g));
  }
}
BENCHMARK(BM_Classify3x3);

void BM_Enumerate(benchmark::State& state) {
  Shape shape{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_generic(shape, static_cast<int>(state.range(2))));
  }
}
BENCHMARK(BM_Enumerate)->Args({2, 3, 1})->Args({3, 3, 1})->Args({3, 3, 4});

void BM_ZeroSumOracle(benchmark::State& state) {
  Shape shape{2, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(zero_sum_realizability_oracle(shape));
  }
}
BENCHMARK(BM_ZeroSumOracle)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
