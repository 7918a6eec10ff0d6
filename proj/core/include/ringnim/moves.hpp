#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringnim/position.hpp"

namespace ringnim {

/// Stones taken from the window of min(k, m) piles starting at window_start
/// and running in increasing index order (wrapping around).
struct Move {
  std::size_t window_start = 0;
  std::vector<Pile> removals;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move& a, const Move& b) {
    if (auto c = a.window_start <=> b.window_start; c != 0) return c;
    return a.removals <=> b.removals;
  }
};

std::string format_move(const Move& mv);  // "start=1 removals=1,1,0"

/// Width of every window on a circle of m piles.
inline std::size_t window_width(const Rules& rules, std::size_t m) {
  return rules.k < m ? rules.k : m;
}

/// Number of distinct windows; a single window covers the whole circle when
/// m <= k.
inline std::size_t window_count(const Rules& rules, std::size_t m) {
  return m <= rules.k ? (m == 0 ? 0 : 1) : m;
}

bool is_terminal(const Rules& rules, const Position& pos);

/// Reason a move is illegal, or nullopt when it is legal. The string is a
/// stable machine-readable tag: "invalid-window", "wrong-removal-length",
/// "removal-exceeds-pile", "zero-total" or "terminal-position".
std::optional<std::string> illegal_reason(const Rules& rules,
                                          const Position& pos, const Move& mv);

/// Result keeps circular order starting from index 0 and is not canonicalized.
/// Throws GameError(InvalidWindow / InvalidRemoval).
Position apply_move(const Rules& rules, const Position& pos, const Move& mv);

struct Successor {
  Move move;          // smallest witness reaching `position`
  Position position;  // canonical
};

/// Every distinct canonical successor with its lexicographically smallest
/// witness move, sorted by successor. Throws GameError(TerminalPosition).
std::vector<Successor> legal_moves(const Rules& rules, const Position& pos);

/// Calls fn(window_start, removals, successor) for every legal move in
/// (window_start, removals) lexicographic order; successor is the raw,
/// uncanonicalized result. Stops early when fn returns false. Returns false
/// iff stopped early.
template <class Fn>
bool visit_moves(const Rules& rules, std::span<const Pile> piles, Fn&& fn) {
  const std::size_t m = piles.size();
  const std::size_t w = window_width(rules, m);
  const std::size_t windows = window_count(rules, m);
  const bool shrinking = rules.variant == Variant::Shrinking;

  std::vector<Pile> removals(w);
  std::vector<Pile> work(piles.begin(), piles.end());
  std::vector<Pile> successor;
  successor.reserve(m);

  for (std::size_t start = 0; start < windows; ++start) {
    std::fill(removals.begin(), removals.end(), Pile{0});
    auto cap = [&](std::size_t j) { return piles[(start + j) % m]; };
    while (true) {
      // Next removal vector in lexicographic order (last digit fastest).
      std::size_t j = w;
      while (j > 0) {
        --j;
        if (removals[j] < cap(j)) {
          ++removals[j];
          break;
        }
        removals[j] = 0;
        if (j == 0) {
          j = w + 1;  // wrapped: window exhausted
          break;
        }
      }
      if (j == w + 1 || w == 0) break;

      for (std::size_t i = 0; i < w; ++i) {
        const std::size_t idx = (start + i) % m;
        work[idx] = piles[idx] - removals[i];
      }
      successor.clear();
      if (shrinking) {
        for (Pile p : work)
          if (p != 0) successor.push_back(p);
      } else {
        successor.assign(work.begin(), work.end());
      }
      for (std::size_t i = 0; i < w; ++i) {
        const std::size_t idx = (start + i) % m;
        work[idx] = piles[idx];
      }
      if (!fn(start, std::span<const Pile>(removals),
              std::span<const Pile>(successor)))
        return false;
    }
  }
  return true;
}

}  // namespace ringnim
