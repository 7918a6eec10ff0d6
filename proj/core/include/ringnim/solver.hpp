#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "ringnim/enumerate.hpp"
#include "ringnim/moves.hpp"
#include "ringnim/position.hpp"

namespace ringnim {

/// Memo table from (rules, canonical position) to status.
///
/// Safe for concurrent readers and writers. Writers race benignly: every
/// writer of a key has computed the same value from the same game tree, so
/// whichever store lands last leaves the table unchanged in content.
class SolveCache {
 public:
  SolveCache() = default;
  SolveCache(const SolveCache&) = delete;
  SolveCache& operator=(const SolveCache&) = delete;

  std::optional<Status> find(const Rules& rules,
                             std::span<const Pile> canonical) const;
  void store(const Rules& rules, std::span<const Pile> canonical, Status s);

  std::size_t size() const;
  void clear();

 private:
  struct Key {
    Variant variant;
    unsigned k;
    std::vector<Pile> piles;
  };
  struct KeyView {
    Variant variant;
    unsigned k;
    std::span<const Pile> piles;
  };
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(const KeyView& key) const noexcept;
    std::size_t operator()(const Key& key) const noexcept {
      return (*this)(KeyView{key.variant, key.k, key.piles});
    }
  };
  struct Eq {
    using is_transparent = void;
    static KeyView view(const Key& k) { return {k.variant, k.k, k.piles}; }
    static const KeyView& view(const KeyView& k) { return k; }
    template <class A, class B>
    bool operator()(const A& a, const B& b) const noexcept {
      const KeyView& x = view(a);
      const KeyView& y = view(b);
      return x.variant == y.variant && x.k == y.k &&
             std::equal(x.piles.begin(), x.piles.end(), y.piles.begin(),
                        y.piles.end());
    }
  };
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<Key, Status, Hash, Eq> table;
  };
  static constexpr std::size_t kShards = 64;

  Shard& shard_for(std::size_t hash) const {
    return shards_[hash % kShards];
  }

  mutable std::array<Shard, kShards> shards_;
};

struct SolverOptions {
  /// Positions with more stones than this are refused (budget-exceeded).
  std::uint64_t max_total_stones = 64;
};

/// Map from canonical position to status; iteration is lexicographic.
using SolvedSpace = std::map<Position, Status>;

/// Exhaustive perfect-play oracle over a shared cache.
class Solver {
 public:
  explicit Solver(SolveCache& cache, SolverOptions options = {})
      : cache_(&cache), options_(options) {}

  const SolverOptions& options() const noexcept { return options_; }
  SolveCache& cache() const noexcept { return *cache_; }

  /// Top-down memoized search. Successors are explored in ascending canonical
  /// order and the search stops at the first P successor.
  Status status(const Rules& rules, const Position& pos) const;

  /// Legal moves (one witness per canonical successor) reaching a P position.
  std::vector<Successor> winning_moves(const Rules& rules,
                                       const Position& pos) const;

  /// From an N position: the winning move with the smallest successor. From
  /// a P position: the legal move with the smallest successor.
  std::optional<Successor> best_move(const Rules& rules,
                                     const Position& pos) const;

  /// Bottom-up solve of every canonical position in `scope`. The closure of
  /// the scope under moves (all smaller totals, and for shrinking games all
  /// smaller pile counts) is solved level by level; within a level positions
  /// are split across `jobs` worker threads.
  SolvedSpace solve_space(const Rules& rules, const EnumerationScope& scope,
                          unsigned jobs = 1) const;

  /// Status computed from successors already present in the cache, scanning
  /// moves lazily and stopping at the first P successor. Used by the
  /// bottom-up pass; throws std::logic_error on a cache miss.
  Status status_from_cache(const Rules& rules,
                           std::span<const Pile> canonical) const;

 private:
  Status solve_canonical(const Rules& rules, const Position& canonical) const;
  void check_budget(const Position& pos) const;

  SolveCache* cache_;
  SolverOptions options_;
};

}  // namespace ringnim
