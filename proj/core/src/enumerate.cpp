#include "ringnim/enumerate.hpp"

#include <algorithm>

namespace ringnim {

namespace {

// Fills slots 1..n-1 with values >= piles[0] summing to `remaining`. A
// canonical sequence starts with its minimum, which prunes most of the
// composition tree.
void extend(std::vector<Pile>& piles, std::size_t slot, std::uint64_t remaining,
            std::vector<Position>& out) {
  const std::size_t n = piles.size();
  const Pile floor = piles[0];
  if (slot + 1 == n) {
    if (remaining < floor) return;
    piles[slot] = static_cast<Pile>(remaining);
    if (is_canonical(piles)) out.emplace_back(piles);
    return;
  }
  const std::uint64_t slots_after = n - slot - 1;
  if (remaining < floor * (slots_after + 1)) return;
  const std::uint64_t hi = remaining - floor * slots_after;
  for (std::uint64_t v = floor; v <= hi; ++v) {
    piles[slot] = static_cast<Pile>(v);
    extend(piles, slot + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<Position> canonical_positions(PileMode mode, unsigned length,
                                          std::uint64_t sum) {
  std::vector<Position> out;
  if (length == 0) {
    if (sum == 0) out.emplace_back();
    return out;
  }
  const std::uint64_t lo = mode == PileMode::Positive ? 1 : 0;
  std::vector<Pile> piles(length);
  if (length == 1) {
    if (sum >= lo) out.emplace_back(Position{static_cast<Pile>(sum)});
    return out;
  }
  for (std::uint64_t first = lo; first * length <= sum; ++first) {
    piles[0] = static_cast<Pile>(first);
    extend(piles, 1, sum - first, out);
  }
  return out;
}

PositionEnumerator::PositionEnumerator(EnumerationScope scope)
    : scope_(scope),
      sum_(scope.lowest_sum()),
      done_(scope.pile_count_min > scope.pile_count_max ||
            scope.lowest_sum() > scope.highest_sum()) {}

std::vector<Position> PositionEnumerator::level(std::uint64_t sum) const {
  std::vector<Position> out;
  for (unsigned n = scope_.pile_count_min; n <= scope_.pile_count_max; ++n) {
    auto part = canonical_positions(scope_.mode, n, sum);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> PositionEnumerator::next_level() {
  if (cursor_ < buffer_.size()) {
    std::vector<Position> rest(
        std::make_move_iterator(buffer_.begin() + static_cast<std::ptrdiff_t>(cursor_)),
        std::make_move_iterator(buffer_.end()));
    buffer_.clear();
    cursor_ = 0;
    return rest;
  }
  while (!done_) {
    const std::uint64_t s = sum_;
    if (sum_ == scope_.highest_sum()) done_ = true;
    else ++sum_;
    auto positions = level(s);
    if (!positions.empty()) return positions;
  }
  return {};
}

std::optional<Position> PositionEnumerator::next() {
  if (cursor_ >= buffer_.size()) {
    buffer_ = next_level();
    cursor_ = 0;
    if (buffer_.empty()) return std::nullopt;
  }
  return std::move(buffer_[cursor_++]);
}

std::vector<Position> enumerate_positions(const EnumerationScope& scope) {
  std::vector<Position> out;
  PositionEnumerator stream(scope);
  for (auto level = stream.next_level(); !level.empty();
       level = stream.next_level()) {
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace ringnim
