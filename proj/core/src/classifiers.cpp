#include "ringnim/classifiers.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "ringnim/error.hpp"

namespace ringnim {

namespace {

constexpr std::size_t kMaxOrientLen = 16;

// Calls fn(x) for each of the 2m orientations (rotations forward, then
// reflected) until fn returns true. x is 1-based: x[1] .. x[m].
template <class Fn>
bool any_orientation(const Position& pos, Fn&& fn) {
  const std::size_t m = pos.size();
  std::array<std::uint64_t, kMaxOrientLen + 1> x{};
  for (bool rev : {false, true}) {
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t i = 0; i < m; ++i)
        x[i + 1] = rev ? pos[(s + m - i) % m] : pos[(s + i) % m];
      if (fn(x, s, rev)) return true;
    }
  }
  return false;
}

void require_length(const Position& pos, std::size_t n, const char* who) {
  if (pos.size() != n) {
    throw GameError(ErrorCode::WrongLength,
                    std::string(who) + " needs " + std::to_string(n) +
                        " piles, got " + display_position(pos));
  }
}

void require_shrinking_domain(const Position& pos, std::size_t max_piles,
                              const char* who) {
  if (pos.size() > max_piles) {
    throw GameError(ErrorCode::WrongLength,
                    std::string(who) + " covers at most " +
                        std::to_string(max_piles) + " piles, got " +
                        display_position(pos));
  }
  if (!pos.all_positive()) {
    throw GameError(ErrorCode::NonpositivePile,
                    std::string(who) + " needs positive piles, got " +
                        display_position(pos));
  }
}

bool all_equal(const Position& pos) {
  return std::adjacent_find(pos.begin(), pos.end(), std::not_equal_to<>()) ==
         pos.end();
}

Pile max_pile(const Position& pos) {
  return pos.empty() ? 0 : *std::max_element(pos.begin(), pos.end());
}

Pile min_pile(const Position& pos) {
  return pos.empty() ? 0 : *std::min_element(pos.begin(), pos.end());
}

// (a,b,a,b) with a != b.
bool alternating_pair(const Position& pos) {
  return pos.size() == 4 && pos[0] == pos[2] && pos[1] == pos[3] &&
         pos[0] != pos[1];
}

}  // namespace

std::uint64_t nim_sum(std::span<const Pile> values) {
  std::uint64_t acc = 0;
  for (Pile v : values) acc ^= v;
  return acc;
}

Position tau(const Position& pos) {
  if (!pos.all_positive()) {
    throw GameError(ErrorCode::NonpositivePile,
                    "tau needs every pile >= 1, got " + display_position(pos));
  }
  std::vector<Pile> out(pos.begin(), pos.end());
  for (Pile& p : out) --p;
  return Position(std::move(out));
}

Position tau_inverse(const Position& pos) {
  std::vector<Pile> out(pos.begin(), pos.end());
  for (Pile& p : out) ++p;
  return Position(std::move(out));
}

std::vector<OppositeDifferenceFit> fit_opposite_difference_all(
    const Position& pos) {
  require_length(pos, 6, "opposite-difference fit");
  std::vector<OppositeDifferenceFit> fits;
  any_orientation(pos, [&](const auto& x, std::size_t s, bool rev) {
    if (x[4] >= x[1] && x[4] - x[1] == x[2] - x[5] &&
        x[2] - x[5] == x[6] - x[3] && x[2] >= x[5] && x[6] >= x[3]) {
      fits.push_back({static_cast<Pile>(x[1]), static_cast<Pile>(x[5]),
                      static_cast<Pile>(x[3]),
                      static_cast<Pile>(x[4] - x[1]), s, rev});
    }
    return false;
  });
  return fits;
}

std::optional<OppositeDifferenceFit> fit_opposite_difference(
    const Position& pos) {
  auto fits = fit_opposite_difference_all(pos);
  if (fits.empty()) return std::nullopt;
  return fits.front();
}

bool p_cn52(const Position& pos) {
  require_length(pos, 5, "cn:5,2");
  const std::uint64_t hi = max_pile(pos);
  const std::uint64_t lo = min_pile(pos);
  // (M, m, a, b, m)
  return any_orientation(pos, [&](const auto& x, auto, auto) {
    return x[1] == hi && x[2] == lo && x[5] == lo && x[1] + x[2] == x[3] + x[4];
  });
}

bool p_cn53(const Position& pos) {
  require_length(pos, 5, "cn:5,3");
  const std::uint64_t hi = max_pile(pos);
  // (0, M, a, b, M)
  return any_orientation(pos, [&](const auto& x, auto, auto) {
    return x[1] == 0 && x[2] == hi && x[5] == hi && x[3] + x[4] == hi;
  });
}

bool p_cn63(const Position& pos) {
  return fit_opposite_difference(pos).has_value();
}

bool p_cn64(const Position& pos) {
  for (const auto& fit : fit_opposite_difference_all(pos)) {
    if (nim_sum({fit.a, fit.b, fit.c}) == 0) return true;
  }
  return false;
}

bool p_cn86(const Position& pos) {
  require_length(pos, 8, "cn:8,6");
  const std::uint64_t hi = max_pile(pos);
  // (0, M, a, M-a, alpha, M-b, b, M) with alpha = min(M, a+b)
  return any_orientation(pos, [&](const auto& x, auto, auto) {
    return x[1] == 0 && x[2] == hi && x[8] == hi && x[3] + x[4] == hi &&
           x[6] + x[7] == hi && x[5] == std::min(hi, x[3] + x[7]);
  });
}

bool p_cn_moore(unsigned k, const Position& pos) {
  require_length(pos, std::size_t{k} + 1, "cn:moore");
  return all_equal(pos);
}

bool p_scn42(const Position& pos) {
  require_shrinking_domain(pos, 4, "scn:4,2");
  switch (pos.size()) {
    case 0: return true;
    case 3: return all_equal(pos);
    case 4: return alternating_pair(pos);
    default: return false;
  }
}

bool p_scn52(const Position& pos) {
  require_shrinking_domain(pos, 5, "scn:5,2");
  switch (pos.size()) {
    case 0: return true;
    case 3: return all_equal(pos);
    case 4: return alternating_pair(pos);
    case 5: break;
    default: return false;
  }
  return any_orientation(pos, [](const auto& x, auto, auto) {
    // (M, m, a, b, m) with m < a,b < M and m + M = a + b
    if (x[2] == x[5]) {
      const auto m = x[2];
      const auto big = x[1];
      if (m < x[3] && x[3] < big && m < x[4] && x[4] < big &&
          m + big == x[3] + x[4])
        return true;
    }
    // The remaining families share the shape (., ., m, m, .).
    if (x[3] != x[4]) return false;
    const auto m = x[3];
    const bool odd = m % 2 == 1;
    // (m+1, M, m, m, M): m even with m+2 <= M, or m odd with m+3 <= M
    if (x[1] == m + 1 && x[2] == x[5]) {
      const auto big = x[2];
      if (!odd && m + 2 <= big) return true;
      if (odd && m + 3 <= big) return true;
    }
    if (!odd) return false;
    // (m+2, m+1, m, m, m+1) and (m+1, m+1, m, m, m+2), m odd
    if (x[1] == m + 2 && x[2] == m + 1 && x[5] == m + 1) return true;
    if (x[1] == m + 1 && x[2] == m + 1 && x[5] == m + 2) return true;
    return false;
  });
}

bool p_scn53(const Position& pos) {
  require_shrinking_domain(pos, 5, "scn:5,3");
  switch (pos.size()) {
    case 0: return true;
    case 4: return all_equal(pos);
    case 5: break;
    default: return false;
  }
  return any_orientation(pos, [](const auto& x, auto, auto) {
    // (1, M, a, b, M) with 1 <= a < b <= M and 1 + M = a + b
    if (x[1] == 1 && x[2] == x[5] && x[3] < x[4] && x[4] <= x[2] &&
        1 + x[2] == x[3] + x[4])
      return true;
    // (2, 2p, p+1, p, 2p-1) with p >= 2
    const auto p = x[4];
    return x[1] == 2 && p >= 2 && x[2] == 2 * p && x[3] == p + 1 &&
           x[5] == 2 * p - 1;
  });
}

bool scn86_family(const Position& pos) {
  require_length(pos, 8, "scn:8,6 family");
  if (!pos.all_positive()) {
    throw GameError(ErrorCode::NonpositivePile,
                    "scn:8,6 family needs positive piles, got " +
                        display_position(pos));
  }
  // (1, M, a, M-a+1, alpha, M-b+1, b, M), a,b <= M, alpha = min(M, a+b-1)
  return any_orientation(pos, [](const auto& x, auto, auto) {
    const auto big = x[2];
    return x[1] == 1 && x[8] == big && x[3] <= big && x[7] <= big &&
           x[3] + x[4] == big + 1 && x[6] + x[7] == big + 1 &&
           x[5] == std::min(big, x[3] + x[7] - 1);
  });
}

bool scn86_excluded(const Position& pos) {
  if (pos.size() != 8) return false;
  return any_orientation(pos, [](const auto& x, auto, auto) {
    const auto p = x[3];
    const auto q = 2 * p - 1;
    return p >= 1 && x[1] == 1 && x[2] == q && x[4] == p && x[5] == q &&
           x[6] == p && x[7] == p && x[8] == q;
  });
}

bool p_scn86(const Position& pos) {
  require_shrinking_domain(pos, 8, "scn:8,6");
  switch (pos.size()) {
    case 0: return true;
    case 7: return all_equal(pos);
    case 8: return scn86_family(pos) && !scn86_excluded(pos);
    default: return false;
  }
}

ClassifierId ClassifierId::parse(std::string_view name) {
  static const std::pair<std::string_view, Game> kFixed[] = {
      {"cn:5,2", Game::CN52},   {"cn:5,3", Game::CN53},
      {"cn:6,3", Game::CN63},   {"cn:6,4", Game::CN64},
      {"cn:8,6", Game::CN86},   {"scn:4,2", Game::SCN42},
      {"scn:5,2", Game::SCN52}, {"scn:5,3", Game::SCN53},
      {"scn:8,6", Game::SCN86},
  };
  for (const auto& [text, game] : kFixed) {
    if (name == text) return ClassifierId{game, 0};
  }
  constexpr std::string_view kMoore = "cn:moore:";
  if (name.starts_with(kMoore)) {
    const std::string_view digits = name.substr(kMoore.size());
    unsigned k = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1 &&
        k < kMaxOrientLen)
      return ClassifierId{Game::CN_MOORE, k};
  }
  throw GameError(ErrorCode::UnknownClassifier,
                  "unknown classifier '" + std::string(name) + "'");
}

std::string ClassifierId::name() const {
  switch (game) {
    case Game::CN52: return "cn:5,2";
    case Game::CN53: return "cn:5,3";
    case Game::CN63: return "cn:6,3";
    case Game::CN64: return "cn:6,4";
    case Game::CN86: return "cn:8,6";
    case Game::CN_MOORE: return "cn:moore:" + std::to_string(moore_k);
    case Game::SCN42: return "scn:4,2";
    case Game::SCN52: return "scn:5,2";
    case Game::SCN53: return "scn:5,3";
    case Game::SCN86: return "scn:8,6";
  }
  return "?";
}

Rules ClassifierId::rules() const {
  switch (game) {
    case Game::CN52: return Rules::circular(2);
    case Game::CN53: return Rules::circular(3);
    case Game::CN63: return Rules::circular(3);
    case Game::CN64: return Rules::circular(4);
    case Game::CN86: return Rules::circular(6);
    case Game::CN_MOORE: return Rules::circular(moore_k);
    case Game::SCN42: return Rules::shrinking(2);
    case Game::SCN52: return Rules::shrinking(2);
    case Game::SCN53: return Rules::shrinking(3);
    case Game::SCN86: return Rules::shrinking(6);
  }
  return {};
}

unsigned ClassifierId::piles() const {
  switch (game) {
    case Game::CN52:
    case Game::CN53: return 5;
    case Game::CN63:
    case Game::CN64: return 6;
    case Game::CN86: return 8;
    case Game::CN_MOORE: return moore_k + 1;
    case Game::SCN42: return 4;
    case Game::SCN52:
    case Game::SCN53: return 5;
    case Game::SCN86: return 8;
  }
  return 0;
}

EnumerationScope ClassifierId::default_scope(std::uint64_t sum_max) const {
  const unsigned n = piles();
  if (rules().variant == Variant::Shrinking)
    return EnumerationScope::up_to(PileMode::Positive, 0, n, sum_max);
  return EnumerationScope::up_to(PileMode::NonNegative, n, n, sum_max);
}

bool ClassifierId::classify(const Position& pos) const {
  switch (game) {
    case Game::CN52: return p_cn52(pos);
    case Game::CN53: return p_cn53(pos);
    case Game::CN63: return p_cn63(pos);
    case Game::CN64: return p_cn64(pos);
    case Game::CN86: return p_cn86(pos);
    case Game::CN_MOORE: return p_cn_moore(moore_k, pos);
    case Game::SCN42: return p_scn42(pos);
    case Game::SCN52: return p_scn52(pos);
    case Game::SCN53: return p_scn53(pos);
    case Game::SCN86: return p_scn86(pos);
  }
  return false;
}

std::vector<ClassifierId> all_classifiers(unsigned moore_min_piles,
                                          unsigned moore_max_piles) {
  std::vector<ClassifierId> ids = {
      {Game::SCN42, 0}, {Game::SCN52, 0}, {Game::SCN53, 0}, {Game::SCN86, 0},
      {Game::CN52, 0},  {Game::CN53, 0},  {Game::CN63, 0},  {Game::CN64, 0},
      {Game::CN86, 0},
  };
  for (unsigned n = moore_min_piles; n <= moore_max_piles; ++n)
    ids.push_back({Game::CN_MOORE, n - 1});
  return ids;
}

}  // namespace ringnim
