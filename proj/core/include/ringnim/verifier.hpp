#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ringnim/classifiers.hpp"
#include "ringnim/enumerate.hpp"
#include "ringnim/solver.hpp"

namespace ringnim {

struct VerifyOptions {
  unsigned jobs = 1;
  std::uint64_t max_total_stones = 64;
  /// Shared cache; a private one is used when null.
  SolveCache* cache = nullptr;
};

struct Mismatch {
  Position position;
  Status oracle;
  bool classifier;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  ClassifierId classifier;
  EnumerationScope scope;
  std::uint64_t positions_checked = 0;
  std::vector<Mismatch> mismatches;  // sorted by position
  std::chrono::milliseconds wall_time{0};

  bool passed() const { return mismatches.empty(); }
};

/// Stone-total bound used when verifying a classifier without an explicit
/// --sum-max (the bounds the acceptance suite runs at).
std::uint64_t default_sum_max(const ClassifierId& classifier);

/// Compares the oracle against the classifier on every canonical position in
/// scope, collecting all disagreements. Throws GameError(BudgetExceeded)
/// when the scope's total exceeds the budget and GameError(WrongLength) when
/// the scope leaves the classifier's pile-count domain.
VerifyReport verify(const ClassifierId& classifier,
                    const EnumerationScope& scope,
                    const VerifyOptions& options = {});

struct NamedCheck {
  std::string label;
  Rules rules;
  Position position;
  Status expected;
  Status actual;
  bool pass;
};

/// Individually cited positions of SCN(6,3) and SCN(8,6).
std::vector<NamedCheck> check_named_positions(const VerifyOptions& options = {});

enum class ConjectureCategory : std::uint8_t {
  Small,         // (i): () or (a,a,a,a,a)
  Pattern,       // (ii): fits (a, b+q, c, a+q, b, c+q) in some orientation
  Exceptional,   // (iii): one of the listed sporadic configurations
  Unclassified,
};

std::string_view to_string(ConjectureCategory c) noexcept;  // "i", "ii", ...

/// Category (iii) configurations, canonicalized.
const std::vector<Position>& conjecture_64_exceptions();

struct UniquenessViolation {
  Pile a, b, q;
  std::set<Pile> c_values;
};

struct ExploreReport {
  Rules rules;
  unsigned pile_count = 0;
  EnumerationScope scope;
  std::vector<Position> p_positions;            // sorted
  std::vector<ConjectureCategory> categories;   // parallel to p_positions
  std::map<ConjectureCategory, std::uint64_t> category_counts;
  std::vector<UniquenessViolation> uniqueness_violations;
  std::vector<Position> unclassified;
  std::chrono::milliseconds wall_time{0};
};

/// Reading of the (a,b,q) -> c uniqueness clause used by the explorer; it is
/// written into every report header.
extern const char* const kConjecture64Reading;

/// Buckets the SCN(6,4) P-positions of `scope` (pile counts 0..6).
ExploreReport explore_conjecture_64(const EnumerationScope& scope,
                                    const VerifyOptions& options = {});

/// Oracle P-positions of an arbitrary game over a scope, sorted.
std::vector<Position> explore_generic(const Rules& rules,
                                      const EnumerationScope& scope,
                                      const VerifyOptions& options = {});

/// Invariant: an 8-pile positive position is in the SCN(8,6) family exactly
/// when its decrement satisfies the CN(8,6) predicate. Returns failures.
std::vector<Position> check_tau_correspondence(std::uint64_t sum_max);

/// Invariant: decrementing (1,M,a,b,M) with 1<=a<b<=M, 1+M=a+b gives a CN(5,3)
/// P-position. Returns the failing (a,b,M) triples.
std::vector<std::tuple<Pile, Pile, Pile>> check_decrement_remark(Pile max_m);

// JSON documents with a stable schema. wall_time_ms is the only field that
// varies between runs with identical inputs.
std::string to_json(const VerifyReport& report);
std::string to_json(const ExploreReport& report);
std::string to_json(const std::vector<NamedCheck>& checks);

}  // namespace ringnim
