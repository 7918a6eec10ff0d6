#include <gtest/gtest.h>

#include <random>
#include <set>

#include "naive_oracle.hpp"
#include "ringnim/error.hpp"
#include "ringnim/moves.hpp"

namespace ringnim {
namespace {

std::set<Position> successor_set(const Rules& rules, const Position& pos) {
  std::set<Position> out;
  for (const auto& s : legal_moves(rules, pos)) out.insert(s.position);
  return out;
}

TEST(ApplyMove, ShrinkingClosesTheCircle) {
  // Figure: (5,3,1,6,4) loses one stone from the 3 and the 1.
  const Position after =
      apply_move(Rules::shrinking(3), {5, 3, 1, 6, 4}, Move{1, {1, 1, 0}});
  EXPECT_EQ(after, (Position{5, 2, 6, 4}));
  EXPECT_EQ(after.size(), 4u);
}

TEST(ApplyMove, StaticKeepsEmptiedPilesInPlace) {
  // Window over the piles holding 7, 1, 5 wraps past the end.
  EXPECT_EQ(apply_move(Rules::circular(3), {5, 3, 1, 7, 1}, Move{3, {3, 1, 3}}),
            (Position{2, 3, 1, 4, 0}));
}

TEST(ApplyMove, ClearingTheBoard) {
  EXPECT_EQ(apply_move(Rules::shrinking(2), {1, 1}, Move{0, {1, 1}}), Position{});
}

TEST(ApplyMove, Errors) {
  const Rules r = Rules::shrinking(2);
  auto code_of = [&](const Position& p, const Move& m) {
    try {
      apply_move(r, p, m);
    } catch (const GameError& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of({1, 2, 3}, Move{3, {1, 0}}), ErrorCode::InvalidWindow);
  EXPECT_EQ(code_of({1, 2, 3}, Move{0, {2, 0}}), ErrorCode::InvalidRemoval);
  EXPECT_EQ(code_of({1, 2, 3}, Move{0, {0, 0}}), ErrorCode::InvalidRemoval);
  EXPECT_EQ(code_of({1, 2, 3}, Move{0, {1}}), ErrorCode::InvalidRemoval);
  // With m <= k only window 0 exists.
  EXPECT_EQ(code_of({1, 2}, Move{1, {1, 0}}), ErrorCode::InvalidWindow);
}

TEST(IllegalReason, Tags) {
  const Rules r = Rules::shrinking(3);
  EXPECT_EQ(illegal_reason(r, {1, 2, 3, 4}, Move{0, {0, 0, 0}}), "zero-total");
  EXPECT_EQ(illegal_reason(r, {1, 2, 3, 4}, Move{4, {1, 0, 0}}), "invalid-window");
  EXPECT_EQ(illegal_reason(r, {1, 2, 3, 4}, Move{3, {5, 0, 0}}), "removal-exceeds-pile");
  EXPECT_EQ(illegal_reason(r, {1, 2, 3, 4}, Move{3, {4, 1, 0}}), std::nullopt);
  EXPECT_EQ(illegal_reason(r, {}, Move{0, {}}), "terminal-position");
  EXPECT_EQ(illegal_reason(Rules::circular(2), {0, 0, 0}, Move{0, {0, 0}}),
            "terminal-position");
}

TEST(LegalMoves, SmallShrinkingCases) {
  EXPECT_EQ(successor_set(Rules::shrinking(2), {1, 1}),
            (std::set<Position>{{}, {1}}));
  EXPECT_EQ(successor_set(Rules::shrinking(2), {1, 1, 1}),
            (std::set<Position>{{1}, {1, 1}}));
  EXPECT_TRUE(successor_set(Rules::shrinking(3), {5, 3, 1, 6, 4})
                  .contains(canonicalize({5, 2, 6, 4})));
}

TEST(LegalMoves, WitnessIsSmallestAndSuccessorsSorted) {
  const auto moves = legal_moves(Rules::shrinking(2), {1, 1, 1});
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0].position, (Position{1}));
  EXPECT_EQ(moves[0].move, (Move{0, {1, 1}}));
  EXPECT_EQ(moves[1].position, (Position{1, 1}));
  EXPECT_EQ(moves[1].move, (Move{0, {0, 1}}));
}

TEST(LegalMoves, SingleWindowWhenFewPilesRemain) {
  const auto moves = legal_moves(Rules::shrinking(3), {2, 1});
  for (const auto& s : moves) EXPECT_EQ(s.move.window_start, 0u);
  EXPECT_TRUE(successor_set(Rules::shrinking(3), {2, 1}).contains(Position{}));
}

TEST(LegalMoves, TerminalThrows) {
  EXPECT_THROW(legal_moves(Rules::shrinking(2), {}), GameError);
  EXPECT_THROW(legal_moves(Rules::circular(2), {0, 0, 0}), GameError);
}

TEST(LegalMoves, AgreesWithBruteForceAndIsDihedralInvariant) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const bool shrinking = rng() % 2;
    const std::size_t m = 1 + rng() % 6;
    const unsigned k = 1 + rng() % (shrinking ? 6 : m);
    naive::Seq s(m);
    for (auto& v : s) v = (shrinking ? 1 : 0) + rng() % 3;
    const Rules rules{shrinking ? Variant::Shrinking : Variant::Static, k};
    if (is_terminal(rules, Position(s))) continue;

    std::set<Position> expected;
    for (const auto& c : naive::canonical_successors(shrinking, k, s))
      expected.insert(Position(c));
    const auto got = successor_set(rules, Position(s));
    EXPECT_EQ(got, expected);
    for (const auto& image : naive::images(s))
      EXPECT_EQ(successor_set(rules, Position(image)), got);

    for (const auto& succ : legal_moves(rules, Position(s))) {
      const Position raw = apply_move(rules, Position(s), succ.move);
      EXPECT_EQ(canonicalize(raw), succ.position);
      EXPECT_LT(raw.total(), Position(s).total());
      EXPECT_LE(raw.size(), m);
    }
    if (shrinking && m <= k) EXPECT_TRUE(got.contains(Position{}));
  }
}

}  // namespace
}  // namespace ringnim
