#include <benchmark/benchmark.h>

#include <random>

#include "ringnim/moves.hpp"
#include "ringnim/solver.hpp"

namespace {

using namespace ringnim;

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<Position> inputs;
  for (int i = 0; i < 256; ++i) {
    std::vector<Pile> piles(static_cast<std::size_t>(state.range(0)));
    for (auto& p : piles) p = 1 + rng() % 6;
    inputs.emplace_back(std::move(piles));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_Canonicalize)->Arg(5)->Arg(8)->Arg(16);

void BM_LegalMoves(benchmark::State& state) {
  const Position pos{5, 3, 1, 6, 4, 2, 7, 3};
  const Rules rules = Rules::shrinking(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(legal_moves(rules, pos));
}
BENCHMARK(BM_LegalMoves)->Arg(2)->Arg(3)->Arg(4);

void BM_SolveSpace(benchmark::State& state) {
  const auto scope = EnumerationScope::up_to(PileMode::Positive, 0, 5,
                                             static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    SolveCache cache;
    benchmark::DoNotOptimize(Solver(cache).solve_space(Rules::shrinking(3), scope));
  }
}
BENCHMARK(BM_SolveSpace)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
