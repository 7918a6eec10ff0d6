#include "ringnim/solver.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "ringnim/error.hpp"

namespace ringnim {

void Solver::check_budget(const Position& pos) const {
  if (pos.total() > options_.max_total_stones) {
    throw GameError(ErrorCode::BudgetExceeded,
                    "position " + display_position(pos) + " has " +
                        std::to_string(pos.total()) +
                        " stones; the solve budget is " +
                        std::to_string(options_.max_total_stones));
  }
}

Status Solver::solve_canonical(const Rules& rules,
                               const Position& canonical) const {
  if (auto hit = cache_->find(rules, canonical.piles())) return *hit;
  Status result = Status::P;
  if (!is_terminal(rules, canonical)) {
    for (const Successor& s : legal_moves(rules, canonical)) {
      if (solve_canonical(rules, s.position) == Status::P) {
        result = Status::N;
        break;
      }
    }
  }
  cache_->store(rules, canonical.piles(), result);
  return result;
}

Status Solver::status(const Rules& rules, const Position& pos) const {
  check_budget(pos);
  return solve_canonical(rules, canonicalize(pos));
}

std::vector<Successor> Solver::winning_moves(const Rules& rules,
                                             const Position& pos) const {
  check_budget(pos);
  std::vector<Successor> out;
  if (is_terminal(rules, pos)) return out;
  for (Successor& s : legal_moves(rules, pos)) {
    if (solve_canonical(rules, s.position) == Status::P)
      out.push_back(std::move(s));
  }
  return out;
}

std::optional<Successor> Solver::best_move(const Rules& rules,
                                           const Position& pos) const {
  check_budget(pos);
  auto moves = legal_moves(rules, pos);  // throws on terminal positions
  for (Successor& s : moves) {
    if (solve_canonical(rules, s.position) == Status::P) return std::move(s);
  }
  if (moves.empty()) return std::nullopt;
  return std::move(moves.front());
}

Status Solver::status_from_cache(const Rules& rules,
                                 std::span<const Pile> canonical) const {
  std::vector<Pile> canon;
  bool found_p = false;
  visit_moves(rules, canonical,
              [&](std::size_t, std::span<const Pile>,
                  std::span<const Pile> successor) {
                canonicalize_into(successor, canon);
                auto hit = cache_->find(rules, canon);
                if (!hit) {
                  throw std::logic_error(
                      "bottom-up solve reached an unsolved successor " +
                      display_position(Position(canon)));
                }
                if (*hit == Status::P) {
                  found_p = true;
                  return false;
                }
                return true;
              });
  return found_p ? Status::N : Status::P;
}

SolvedSpace Solver::solve_space(const Rules& rules,
                                const EnumerationScope& scope,
                                unsigned jobs) const {
  if (jobs == 0) jobs = 1;
  const bool shrinking = rules.variant == Variant::Shrinking;
  if (shrinking && scope.mode != PileMode::Positive) {
    throw GameError(ErrorCode::InvalidPosition,
                    "shrinking games only have positive piles");
  }

  EnumerationScope closure = EnumerationScope::up_to(
      EnumerationScope::mode_for(rules.variant),
      shrinking ? 0u : scope.pile_count_min, scope.pile_count_max,
      scope.highest_sum());

  PositionEnumerator levels(closure);
  for (auto level = levels.next_level(); !level.empty();
       level = levels.next_level()) {
    auto solve_one = [&](const Position& pos) {
      if (cache_->find(rules, pos.piles())) return;
      cache_->store(rules, pos.piles(), status_from_cache(rules, pos.piles()));
    };
    if (jobs == 1 || level.size() < 64) {
      for (const Position& pos : level) solve_one(pos);
      continue;
    }
    // Every successor lies on a lower level, so positions within a level are
    // independent of one another.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
          constexpr std::size_t kChunk = 32;
          try {
            for (std::size_t begin = next.fetch_add(kChunk);
                 begin < level.size(); begin = next.fetch_add(kChunk)) {
              const std::size_t end = std::min(begin + kChunk, level.size());
              for (std::size_t i = begin; i < end; ++i) solve_one(level[i]);
            }
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  SolvedSpace out;
  for (Position& pos : enumerate_positions(scope)) {
    auto hit = cache_->find(rules, pos.piles());
    if (!hit) throw std::logic_error("position missing after bottom-up solve");
    out.emplace(std::move(pos), *hit);
  }
  return out;
}

}  // namespace ringnim
