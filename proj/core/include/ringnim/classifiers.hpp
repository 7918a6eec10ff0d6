#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringnim/enumerate.hpp"
#include "ringnim/position.hpp"

namespace ringnim {

std::uint64_t nim_sum(std::span<const Pile> values);
inline std::uint64_t nim_sum(std::initializer_list<Pile> values) {
  return nim_sum(std::span<const Pile>(values.begin(), values.size()));
}

/// Removes one stone from every pile. Throws GameError(NonpositivePile).
Position tau(const Position& pos);
Position tau_inverse(const Position& pos);

/// A six-pile orientation (x1..x6) reading as (a, b+q, c, a+q, b, c+q).
struct OppositeDifferenceFit {
  Pile a = 0;
  Pile b = 0;
  Pile c = 0;
  Pile q = 0;
  std::size_t rotation = 0;  // start index of the orientation
  bool reflected = false;

  friend bool operator==(const OppositeDifferenceFit&,
                         const OppositeDifferenceFit&) = default;
};

/// First fitting orientation, trying rotations 0..5 forward then 0..5
/// reflected. Throws GameError(WrongLength) unless pos has six piles.
std::optional<OppositeDifferenceFit> fit_opposite_difference(
    const Position& pos);

/// Every fitting orientation in the same order (one entry per orientation,
/// so symmetric positions can repeat a binding).
std::vector<OppositeDifferenceFit> fit_opposite_difference_all(
    const Position& pos);

// Closed-form P-position predicates. Each searches dihedral orientations
// explicitly, so none require a canonical input. Static-game predicates take
// a fixed length; shrinking-game predicates dispatch on the pile count.
bool p_cn52(const Position& pos);
bool p_cn53(const Position& pos);
bool p_cn63(const Position& pos);
bool p_cn64(const Position& pos);
bool p_cn86(const Position& pos);
bool p_cn_moore(unsigned k, const Position& pos);
bool p_scn42(const Position& pos);
bool p_scn52(const Position& pos);
bool p_scn53(const Position& pos);
bool p_scn86(const Position& pos);

/// Eight-pile family (1,M,a,M-a+1,alpha,M-b+1,b,M) with a,b <= M and
/// alpha = min(M, a+b-1), before the exclusion. Throws unless 8 piles.
bool scn86_family(const Position& pos);
/// (1,2p-1,p,p,2p-1,p,p,2p-1), p >= 1, up to symmetry.
bool scn86_excluded(const Position& pos);

enum class Game {
  CN52, CN53, CN63, CN64, CN86, CN_MOORE,
  SCN42, SCN52, SCN53, SCN86,
};

/// Registry entry naming one closed-form predicate and the game it claims to
/// characterize.
struct ClassifierId {
  Game game = Game::SCN42;
  unsigned moore_k = 0;  // only for CN_MOORE

  /// "cn:5,2", ..., "cn:moore:3", "scn:4,2", ...
  static ClassifierId parse(std::string_view name);
  std::string name() const;

  Rules rules() const;
  /// Pile count of the starting configuration (n).
  unsigned piles() const;
  /// Pile counts the predicate covers: 0..n for shrinking games, n..n for
  /// static games.
  EnumerationScope default_scope(std::uint64_t sum_max) const;
  bool classify(const Position& pos) const;

  friend bool operator==(const ClassifierId&, const ClassifierId&) = default;
};

std::vector<ClassifierId> all_classifiers(unsigned moore_min_piles = 3,
                                          unsigned moore_max_piles = 6);

}  // namespace ringnim
