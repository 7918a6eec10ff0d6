#include "ringnim/moves.hpp"

#include <algorithm>

#include "ringnim/error.hpp"

namespace ringnim {

std::string format_move(const Move& mv) {
  std::string out = "start=" + std::to_string(mv.window_start) + " removals=";
  for (std::size_t i = 0; i < mv.removals.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mv.removals[i]);
  }
  return out;
}

bool is_terminal(const Rules& rules, const Position& pos) {
  return rules.variant == Variant::Shrinking ? pos.empty() : pos.all_zero();
}

std::optional<std::string> illegal_reason(const Rules& rules,
                                          const Position& pos, const Move& mv) {
  const std::size_t m = pos.size();
  if (is_terminal(rules, pos)) return "terminal-position";
  if (mv.window_start >= window_count(rules, m)) return "invalid-window";
  const std::size_t w = window_width(rules, m);
  if (mv.removals.size() != w) return "wrong-removal-length";
  std::uint64_t taken = 0;
  for (std::size_t j = 0; j < w; ++j) {
    if (mv.removals[j] > pos.at_circular(mv.window_start + j))
      return "removal-exceeds-pile";
    taken += mv.removals[j];
  }
  if (taken == 0) return "zero-total";
  return std::nullopt;
}

Position apply_move(const Rules& rules, const Position& pos, const Move& mv) {
  if (auto reason = illegal_reason(rules, pos, mv)) {
    const ErrorCode code = (*reason == "invalid-window")
                               ? ErrorCode::InvalidWindow
                               : ErrorCode::InvalidRemoval;
    throw GameError(code, "illegal move " + format_move(mv) + " on " +
                              display_position(pos) + ": " + *reason);
  }
  const std::size_t m = pos.size();
  std::vector<Pile> piles(pos.begin(), pos.end());
  for (std::size_t j = 0; j < mv.removals.size(); ++j)
    piles[(mv.window_start + j) % m] -= mv.removals[j];
  if (rules.variant == Variant::Shrinking)
    std::erase(piles, Pile{0});
  return Position(std::move(piles));
}

std::vector<Successor> legal_moves(const Rules& rules, const Position& pos) {
  if (is_terminal(rules, pos))
    throw GameError(ErrorCode::TerminalPosition,
                    "no moves from terminal position " + display_position(pos));

  std::vector<Successor> all;
  std::vector<Pile> canon;
  visit_moves(rules, pos.piles(),
              [&](std::size_t start, std::span<const Pile> removals,
                  std::span<const Pile> successor) {
                canonicalize_into(successor, canon);
                all.push_back(Successor{
                    Move{start, {removals.begin(), removals.end()}},
                    Position(canon)});
                return true;
              });
  // Moves arrive in ascending witness order, so a stable sort keeps the
  // smallest witness first within each successor.
  std::stable_sort(all.begin(), all.end(),
                   [](const Successor& a, const Successor& b) {
                     return a.position < b.position;
                   });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Successor& a, const Successor& b) {
                          return a.position == b.position;
                        }),
            all.end());
  return all;
}

}  // namespace ringnim
