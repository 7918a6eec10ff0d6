#include <gtest/gtest.h>

#include <random>

#include "naive_oracle.hpp"
#include "ringnim/classifiers.hpp"
#include "ringnim/error.hpp"
#include "ringnim/verifier.hpp"

namespace ringnim {
namespace {

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected GameError";
  return ErrorCode::ParseError;
}

TEST(NimSum, Basics) {
  EXPECT_EQ(nim_sum({1, 2, 3}), 0u);
  EXPECT_EQ(nim_sum({0, 13}), 13u);
  EXPECT_EQ(nim_sum({5, 9}), 12u);
  EXPECT_EQ(nim_sum(std::span<const Pile>{}), 0u);
}

TEST(Tau, DecrementsEveryPile) {
  EXPECT_EQ(tau({1, 3, 2, 2, 3, 2, 2, 3}), (Position{0, 2, 1, 1, 2, 1, 1, 2}));
  EXPECT_EQ(tau({1, 1, 1, 1, 1, 1, 1, 1}), (Position{0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(tau_inverse(tau({4, 7})), (Position{4, 7}));
  EXPECT_EQ(error_of([] { tau({0, 1}); }), ErrorCode::NonpositivePile);
}

TEST(OppositeDifference, Fits) {
  const auto fit = fit_opposite_difference({1, 3, 3, 2, 2, 4});
  ASSERT_TRUE(fit);
  EXPECT_EQ(std::tie(fit->a, fit->b, fit->c, fit->q),
            std::make_tuple(Pile{1}, Pile{2}, Pile{3}, Pile{1}));
  EXPECT_EQ(fit->rotation, 0u);
  EXPECT_FALSE(fit->reflected);

  const auto flat = fit_opposite_difference({2, 2, 2, 2, 2, 2});
  ASSERT_TRUE(flat);
  EXPECT_EQ(std::tie(flat->a, flat->b, flat->c, flat->q),
            std::make_tuple(Pile{2}, Pile{2}, Pile{2}, Pile{0}));

  EXPECT_FALSE(fit_opposite_difference({1, 1, 1, 1, 1, 2}));
  EXPECT_EQ(error_of([] { fit_opposite_difference({1, 2, 3}); }), ErrorCode::WrongLength);
}

TEST(OppositeDifference, AgreesWithBruteForceOverOrientations) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    naive::Seq s(6);
    for (auto& v : s) v = rng() % 4;
    std::size_t expected = 0;
    for (const auto& x : naive::images(s)) {
      const long q = static_cast<long>(x[3]) - x[0];
      if (q >= 0 && static_cast<long>(x[1]) - x[4] == q &&
          static_cast<long>(x[5]) - x[2] == q)
        ++expected;
    }
    EXPECT_EQ(fit_opposite_difference_all(Position(s)).size(), expected);
  }
}

TEST(PredicateCn52, Examples) {
  EXPECT_TRUE(p_cn52({5, 1, 2, 4, 1}));
  EXPECT_TRUE(p_cn52({1, 1, 1, 1, 1}));
  EXPECT_FALSE(p_cn52({2, 1, 1, 1, 1}));
  EXPECT_EQ(error_of([] { p_cn52({1, 2}); }), ErrorCode::WrongLength);
}

TEST(PredicateScn52, Examples) {
  EXPECT_TRUE(p_scn52({3, 4, 2, 2, 4}));
  EXPECT_FALSE(p_scn52({2, 3, 1, 1, 3}));
  EXPECT_TRUE(p_scn52({3, 2, 1, 1, 2}));
  EXPECT_TRUE(p_scn52({1, 2, 1, 2}));
  EXPECT_TRUE(p_scn52({}));
  EXPECT_TRUE(p_scn52({4, 4, 4}));
  EXPECT_FALSE(p_scn52({4}));
  EXPECT_FALSE(p_scn52({4, 4}));
  EXPECT_EQ(error_of([] { p_scn52({1, 1, 1, 1, 1, 1}); }), ErrorCode::WrongLength);
  EXPECT_EQ(error_of([] { p_scn52({1, 0, 1}); }), ErrorCode::NonpositivePile);
}

TEST(PredicateScn42, Examples) {
  EXPECT_TRUE(p_scn42({2, 3, 2, 3}));
  EXPECT_FALSE(p_scn42({2, 2, 2, 2}));
  EXPECT_TRUE(p_scn42({}));
  EXPECT_TRUE(p_scn42({5, 5, 5}));
  EXPECT_EQ(error_of([] { p_scn42({1, 1, 1, 1, 1}); }), ErrorCode::WrongLength);
}

TEST(PredicateCn53, Examples) {
  EXPECT_TRUE(p_cn53({0, 5, 2, 3, 5}));
  EXPECT_TRUE(p_cn53({0, 0, 0, 0, 0}));
  EXPECT_FALSE(p_cn53({1, 5, 2, 3, 5}));
}

TEST(PredicateScn53, Examples) {
  EXPECT_TRUE(p_scn53({1, 4, 2, 3, 4}));
  EXPECT_TRUE(p_scn53({2, 4, 3, 2, 3}));
  EXPECT_FALSE(p_scn53({1, 3, 2, 2, 3}));
  EXPECT_TRUE(p_scn53({3, 3, 3, 3}));
  EXPECT_FALSE(p_scn53({3, 3, 3}));
  EXPECT_TRUE(p_scn53({}));
}

TEST(PredicateCn63, Examples) {
  EXPECT_TRUE(p_cn63({1, 3, 3, 2, 2, 4}));
  EXPECT_TRUE(p_cn63({4, 4, 4, 4, 4, 4}));
  EXPECT_FALSE(p_cn63({1, 1, 1, 1, 1, 2}));
}

TEST(PredicateCn64, Examples) {
  EXPECT_TRUE(p_cn64({1, 3, 3, 2, 2, 4}));
  EXPECT_TRUE(p_cn64({0, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(p_cn64({1, 2, 1, 2, 1, 2}));
}

TEST(PredicateCn86, Examples) {
  EXPECT_TRUE(p_cn86({0, 3, 1, 2, 3, 1, 2, 3}));
  EXPECT_TRUE(p_cn86({0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(p_cn86({0, 3, 1, 2, 2, 1, 2, 3}));
}

TEST(PredicateScn86, Examples) {
  EXPECT_TRUE(p_scn86({1, 3, 1, 3, 2, 2, 2, 3}));
  EXPECT_FALSE(p_scn86({1, 3, 2, 2, 3, 2, 2, 3}));
  EXPECT_FALSE(p_scn86({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(p_scn86({2, 2, 2, 2, 2, 2, 2}));
  EXPECT_FALSE(p_scn86({2, 2, 2, 2, 2, 2}));
  EXPECT_TRUE(p_scn86({}));
}

TEST(PredicateScn86, ExclusionsLieInsideTheFamily) {
  for (Pile p = 1; p <= 12; ++p) {
    const Position excluded{1, 2 * p - 1, p, p, 2 * p - 1, p, p, 2 * p - 1};
    EXPECT_TRUE(scn86_excluded(excluded));
    EXPECT_TRUE(scn86_family(excluded)) << excluded;
    EXPECT_FALSE(p_scn86(excluded));
  }
}

TEST(PredicateMoore, Examples) {
  EXPECT_TRUE(p_cn_moore(3, {2, 2, 2, 2}));
  EXPECT_TRUE(p_cn_moore(2, {0, 0, 0}));
  EXPECT_FALSE(p_cn_moore(3, {1, 2, 2, 2}));
  EXPECT_EQ(error_of([] { p_cn_moore(3, {1, 1, 1}); }), ErrorCode::WrongLength);
}

TEST(Predicates, DihedralInvariant) {
  std::mt19937 rng(13);
  for (const auto& id : all_classifiers()) {
    const unsigned n = id.piles();
    const bool shrinking = id.rules().variant == Variant::Shrinking;
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t m = shrinking ? rng() % (n + 1) : n;
      naive::Seq s(m);
      for (auto& v : s) v = (shrinking ? 1 : 0) + rng() % 5;
      const bool base = id.classify(Position(s));
      for (const auto& image : naive::images(s))
        ASSERT_EQ(id.classify(Position(image)), base) << id.name() << " " << Position(s);
    }
  }
}

TEST(Invariants, TauCorrespondence) {
  EXPECT_TRUE(check_tau_correspondence(14).empty());
}

TEST(Invariants, DecrementRemark) {
  EXPECT_TRUE(check_decrement_remark(12).empty());
}

TEST(ClassifierId, ParsesEveryName) {
  for (const char* name : {"cn:5,2", "cn:5,3", "cn:6,3", "cn:6,4", "cn:8,6", "cn:moore:3",
                           "scn:4,2", "scn:5,2", "scn:5,3", "scn:8,6"}) {
    EXPECT_EQ(ClassifierId::parse(name).name(), name);
  }
  EXPECT_EQ(ClassifierId::parse("cn:moore:4").piles(), 5u);
  EXPECT_EQ(ClassifierId::parse("cn:moore:4").rules(), Rules::circular(4));
  for (const char* bad : {"scn:6,3", "cn:moore:", "cn:moore:x", "", "scn:4,2 "}) {
    EXPECT_EQ(error_of([&] { ClassifierId::parse(bad); }), ErrorCode::UnknownClassifier)
        << bad;
  }
}

}  // namespace
}  // namespace ringnim
