#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ringnim/position.hpp"

namespace ringnim {

enum class PileMode : std::uint8_t {
  Positive,     // every pile >= 1 (shrinking games)
  NonNegative,  // zeros allowed, length fixed (static games)
};

/// A bounded slice of the position space. When exact_sum is set only that
/// total is enumerated and sum_max is ignored.
struct EnumerationScope {
  PileMode mode = PileMode::Positive;
  unsigned pile_count_min = 0;
  unsigned pile_count_max = 0;
  std::uint64_t sum_max = 0;
  std::optional<std::uint64_t> exact_sum;

  std::uint64_t lowest_sum() const { return exact_sum.value_or(0); }
  std::uint64_t highest_sum() const { return exact_sum.value_or(sum_max); }

  static EnumerationScope up_to(PileMode mode, unsigned pmin, unsigned pmax,
                                std::uint64_t sum_max) {
    return {mode, pmin, pmax, sum_max, std::nullopt};
  }
  static EnumerationScope exactly(PileMode mode, unsigned pmin, unsigned pmax,
                                  std::uint64_t sum) {
    return {mode, pmin, pmax, sum, sum};
  }

  /// Natural mode for a game variant.
  static PileMode mode_for(Variant v) {
    return v == Variant::Shrinking ? PileMode::Positive : PileMode::NonNegative;
  }

  friend bool operator==(const EnumerationScope&,
                         const EnumerationScope&) = default;
};

/// Canonical positions of exactly `length` piles with the given total, in
/// lexicographic order.
std::vector<Position> canonical_positions(PileMode mode, unsigned length,
                                          std::uint64_t sum);

/// Single-consumer stream over a scope, ordered by (total ascending, then
/// lexicographic). Each canonical position is produced exactly once.
class PositionEnumerator {
 public:
  explicit PositionEnumerator(EnumerationScope scope);

  std::optional<Position> next();

  /// All positions with the current stream's next total, then advances to
  /// the following total. Empty once the stream is exhausted.
  std::vector<Position> next_level();

 private:
  std::vector<Position> level(std::uint64_t sum) const;

  EnumerationScope scope_;
  std::uint64_t sum_;
  bool done_;
  std::vector<Position> buffer_;
  std::size_t cursor_ = 0;
};

std::vector<Position> enumerate_positions(const EnumerationScope& scope);

}  // namespace ringnim
