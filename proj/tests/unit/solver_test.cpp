#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "naive_oracle.hpp"
#include "ringnim/error.hpp"
#include "ringnim/solver.hpp"

namespace ringnim {
namespace {

Status solve(const Rules& rules, const Position& pos) {
  SolveCache cache;
  return Solver(cache).status(rules, pos);
}

TEST(Status, NamedExamples) {
  EXPECT_EQ(solve(Rules::shrinking(2), {}), Status::P);
  EXPECT_EQ(solve(Rules::shrinking(2), {1, 2, 1, 2}), Status::P);
  EXPECT_EQ(solve(Rules::shrinking(3), {1, 6, 2, 3, 3, 6}), Status::P);
  EXPECT_EQ(solve(Rules::shrinking(2), {1, 1, 1, 1, 1}), Status::N);
  EXPECT_EQ(solve(Rules::circular(2), {0, 0, 0, 0}), Status::P);
}

TEST(Status, BudgetExceeded) {
  SolveCache cache;
  const Solver solver(cache, {10});
  try {
    solver.status(Rules::shrinking(2), {5, 6});
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Status, AgreesWithNaiveOracle) {
  SolveCache cache;
  const Solver solver(cache);
  for (unsigned k : {1u, 2u, 3u}) {
    for (bool shrinking : {true, false}) {
      naive::Oracle oracle(shrinking, k);
      const Rules rules{shrinking ? Variant::Shrinking : Variant::Static, k};
      for (unsigned n = (shrinking ? 0 : std::max(k, 3u)); n <= 5; ++n) {
        for (std::uint64_t s = 0; s <= 7; ++s) {
          std::vector<naive::Seq> all;
          naive::compositions(n, s, shrinking ? 1 : 0, all);
          for (const auto& seq : all) {
            const bool p = oracle.is_p(seq);
            ASSERT_EQ(solver.status(rules, Position(seq)) == Status::P, p)
                << (shrinking ? "scn" : "cn") << " k=" << k << " "
                << Position(seq);
          }
        }
      }
    }
  }
}

TEST(WinningMoves, Examples) {
  SolveCache cache;
  const Solver solver(cache);
  const auto w1 = solver.winning_moves(Rules::shrinking(2), {1, 1, 1, 1, 1});
  ASSERT_FALSE(w1.empty());
  EXPECT_TRUE(std::any_of(w1.begin(), w1.end(), [](const Successor& s) {
    return s.position == Position{1, 1, 1};
  }));
  EXPECT_TRUE(solver.winning_moves(Rules::shrinking(2), {1, 2, 1, 2}).empty());
  const auto w3 = solver.winning_moves(Rules::shrinking(3), {2, 3, 4, 2, 3, 4});
  EXPECT_TRUE(std::any_of(w3.begin(), w3.end(), [](const Successor& s) {
    return s.position == canonicalize({1, 4, 2, 3, 4});
  }));
  for (const auto& s : w3)
    EXPECT_EQ(solver.status(Rules::shrinking(3), s.position), Status::P);
}

TEST(BestMove, Examples) {
  SolveCache cache;
  const Solver solver(cache);
  const auto take_all = solver.best_move(Rules::shrinking(2), {1, 1});
  ASSERT_TRUE(take_all);
  EXPECT_EQ(take_all->position, Position{});
  EXPECT_EQ(take_all->move, (Move{0, {1, 1}}));

  // A P-position still yields a deterministic stalling move.
  const auto stall = solver.best_move(Rules::shrinking(2), {1, 2, 1, 2});
  ASSERT_TRUE(stall);
  EXPECT_EQ(stall->position, legal_moves(Rules::shrinking(2), {1, 2, 1, 2}).front().position);
  EXPECT_EQ(solver.best_move(Rules::shrinking(2), {1, 2, 1, 2})->move, stall->move);

  const auto win = solver.best_move(Rules::shrinking(3), {2, 3, 4, 2, 3, 4});
  ASSERT_TRUE(win);
  EXPECT_EQ(solver.status(Rules::shrinking(3), win->position), Status::P);

  EXPECT_THROW(solver.best_move(Rules::shrinking(2), {}), GameError);
}

TEST(SolveSpace, Examples) {
  SolveCache cache;
  const Solver solver(cache);
  const auto space = solver.solve_space(
      Rules::shrinking(2), EnumerationScope::up_to(PileMode::Positive, 0, 4, 4));
  std::vector<Position> p_set;
  for (const auto& [pos, st] : space)
    if (st == Status::P) p_set.push_back(pos);
  EXPECT_EQ(p_set, (std::vector<Position>{{}, {1, 1, 1}}));

  const auto zeros = solver.solve_space(
      Rules::circular(2), EnumerationScope::exactly(PileMode::NonNegative, 4, 4, 0));
  EXPECT_EQ(zeros, (SolvedSpace{{Position{0, 0, 0, 0}, Status::P}}));
}

TEST(SolveSpace, EightOnesAreN) {
  SolveCache cache;
  const auto space = Solver(cache).solve_space(
      Rules::shrinking(6), EnumerationScope::up_to(PileMode::Positive, 0, 8, 8));
  EXPECT_EQ(space.at(Position{1, 1, 1, 1, 1, 1, 1, 1}), Status::N);
  EXPECT_EQ(space.at(Position{1, 1, 1, 1, 1, 1, 1}), Status::P);
}

TEST(SolveSpace, BottomUpMatchesTopDownAndIsSelfConsistent) {
  for (const Rules rules : {Rules::shrinking(2), Rules::shrinking(3), Rules::circular(2),
                            Rules::circular(4)}) {
    const bool shrinking = rules.variant == Variant::Shrinking;
    const auto scope = shrinking
                           ? EnumerationScope::up_to(PileMode::Positive, 0, 6, 11)
                           : EnumerationScope::up_to(PileMode::NonNegative, 6, 6, 9);
    SolveCache bottom_cache;
    const auto space = Solver(bottom_cache).solve_space(rules, scope);
    SolveCache top_cache;
    const Solver top(top_cache);
    for (const auto& [pos, st] : space) {
      ASSERT_EQ(top.status(rules, pos), st) << pos;
      if (is_terminal(rules, pos)) {
        EXPECT_EQ(st, Status::P);
        continue;
      }
      bool any_p = false;
      for (const auto& s : legal_moves(rules, pos))
        any_p = any_p || top.status(rules, s.position) == Status::P;
      EXPECT_EQ(st == Status::N, any_p) << pos;
    }
  }
}

TEST(SolveSpace, IndependentOfJobCount) {
  const auto scope = EnumerationScope::up_to(PileMode::Positive, 0, 5, 18);
  SolveCache one;
  SolveCache many;
  EXPECT_EQ(Solver(one).solve_space(Rules::shrinking(3), scope, 1),
            Solver(many).solve_space(Rules::shrinking(3), scope, 8));
}

TEST(SolveCache, ConcurrentWritersAgree) {
  // Many threads race to fill the same cache top-down; the resulting table
  // must equal a single-threaded fill.
  const Rules rules = Rules::shrinking(3);
  const auto positions =
      enumerate_positions(EnumerationScope::up_to(PileMode::Positive, 0, 5, 13));
  SolveCache shared;
  {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        const Solver solver(shared);
        std::mt19937 rng(t);
        std::vector<Position> order = positions;
        std::shuffle(order.begin(), order.end(), rng);
        for (const auto& p : order) solver.status(rules, p);
      });
    }
  }
  SolveCache single;
  const Solver reference(single);
  for (const auto& p : positions) {
    const auto got = shared.find(rules, p.piles());
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, reference.status(rules, p));
  }
  EXPECT_EQ(shared.size(), single.size());
}

TEST(SolveCache, KeyIncludesRules) {
  SolveCache cache;
  const Solver solver(cache);
  // Four equal piles: N when k=2, P when k=3.
  EXPECT_EQ(solver.status(Rules::shrinking(2), {2, 2, 2, 2}), Status::N);
  EXPECT_EQ(solver.status(Rules::shrinking(3), {2, 2, 2, 2}), Status::P);
  EXPECT_EQ(solver.status(Rules::shrinking(2), {2, 2, 2, 2}), Status::N);
}

}  // namespace
}  // namespace ringnim
