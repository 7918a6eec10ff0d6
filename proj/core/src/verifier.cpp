#include "ringnim/verifier.hpp"

#include <algorithm>
#include <memory>

#include "ringnim/error.hpp"

namespace ringnim {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

// Uses the caller's cache when given, otherwise owns a private one.
class CacheHandle {
 public:
  explicit CacheHandle(SolveCache* shared)
      : owned_(shared ? nullptr : std::make_unique<SolveCache>()),
        cache_(shared ? shared : owned_.get()) {}
  SolveCache& get() { return *cache_; }

 private:
  std::unique_ptr<SolveCache> owned_;
  SolveCache* cache_;
};

void check_scope_budget(const EnumerationScope& scope,
                        std::uint64_t max_total_stones) {
  if (scope.highest_sum() > max_total_stones) {
    throw GameError(ErrorCode::BudgetExceeded,
                    "scope total " + std::to_string(scope.highest_sum()) +
                        " exceeds the solve budget of " +
                        std::to_string(max_total_stones));
  }
}

void check_scope_domain(const ClassifierId& id, const EnumerationScope& scope) {
  const unsigned n = id.piles();
  const bool shrinking = id.rules().variant == Variant::Shrinking;
  const bool ok = shrinking ? scope.pile_count_max <= n &&
                                  scope.mode == PileMode::Positive
                            : scope.pile_count_min == n &&
                                  scope.pile_count_max == n;
  if (!ok) {
    throw GameError(ErrorCode::WrongLength,
                    "scope pile counts " +
                        std::to_string(scope.pile_count_min) + ".." +
                        std::to_string(scope.pile_count_max) +
                        " fall outside the domain of " + id.name());
  }
}

}  // namespace

std::uint64_t default_sum_max(const ClassifierId& classifier) {
  switch (classifier.game) {
    case Game::SCN42: return 40;
    case Game::SCN52:
    case Game::SCN53: return 28;
    case Game::SCN86: return 18;
    case Game::CN52:
    case Game::CN53: return 22;
    case Game::CN63:
    case Game::CN64: return 18;
    case Game::CN86: return 14;
    case Game::CN_MOORE: return 12;
  }
  return 12;
}

VerifyReport verify(const ClassifierId& classifier,
                    const EnumerationScope& scope,
                    const VerifyOptions& options) {
  check_scope_budget(scope, options.max_total_stones);
  check_scope_domain(classifier, scope);
  const auto start = Clock::now();

  CacheHandle cache(options.cache);
  const Solver solver(cache.get(), {options.max_total_stones});
  const SolvedSpace space =
      solver.solve_space(classifier.rules(), scope, options.jobs);

  VerifyReport report;
  report.classifier = classifier;
  report.scope = scope;
  for (const auto& [pos, status] : space) {
    ++report.positions_checked;
    const bool predicted = classifier.classify(pos);
    if (predicted != (status == Status::P))
      report.mismatches.push_back({pos, status, predicted});
  }
  report.wall_time = since(start);
  return report;
}

std::vector<NamedCheck> check_named_positions(const VerifyOptions& options) {
  struct Case {
    std::string label;
    Rules rules;
    Position position;
    Status expected;
  };
  std::vector<Case> cases;
  cases.push_back({"scn:6,3 sporadic P", Rules::shrinking(3),
                   {1, 6, 2, 3, 3, 6}, Status::P});
  for (auto [a, b] : {std::pair<Pile, Pile>{1, 2}, {2, 3}, {1, 3}}) {
    cases.push_back({"scn:6,3 (a,b,a+b-1,a,b,a+b-1) a=" + std::to_string(a) +
                         " b=" + std::to_string(b),
                     Rules::shrinking(3),
                     {a, b, a + b - 1, a, b, a + b - 1},
                     Status::N});
  }
  for (Pile p = 1; p <= 3; ++p) {
    const Pile q = 2 * p - 1;
    cases.push_back({"scn:8,6 excluded p=" + std::to_string(p),
                     Rules::shrinking(6),
                     {1, q, p, p, q, p, p, q},
                     Status::N});
  }
  for (Pile p = 1; p <= 3; ++p) {
    cases.push_back({"scn:8,6 seven equal p=" + std::to_string(p),
                     Rules::shrinking(6),
                     Position(std::vector<Pile>(7, p)),
                     Status::P});
  }

  CacheHandle cache(options.cache);
  const Solver solver(cache.get(), {options.max_total_stones});
  std::vector<NamedCheck> out;
  for (auto& c : cases) {
    const Status actual = solver.status(c.rules, c.position);
    out.push_back({std::move(c.label), c.rules, std::move(c.position),
                   c.expected, actual, actual == c.expected});
  }
  return out;
}

const char* const kConjecture64Reading =
    "category ii: a six-pile P-position fitting (a,b+q,c,a+q,b,c+q) with "
    "q>=0 in any of its 12 orientations; uniqueness: bindings (a,b,q)->c are "
    "pooled over every fitting orientation of every six-pile P-position and "
    "any (a,b,q) bound to two or more distinct c is reported";

std::string_view to_string(ConjectureCategory c) noexcept {
  switch (c) {
    case ConjectureCategory::Small: return "i";
    case ConjectureCategory::Pattern: return "ii";
    case ConjectureCategory::Exceptional: return "iii";
    case ConjectureCategory::Unclassified: return "unclassified";
  }
  return "?";
}

const std::vector<Position>& conjecture_64_exceptions() {
  static const std::vector<Position> kList = [] {
    std::vector<Position> raw = {
        {5, 9, 10, 7, 8, 12}, {5, 10, 11, 7, 9, 13}, {5, 11, 11, 8, 9, 14}};
    for (auto& p : raw) p = canonicalize(p);
    std::sort(raw.begin(), raw.end());
    return raw;
  }();
  return kList;
}

ExploreReport explore_conjecture_64(const EnumerationScope& scope,
                                    const VerifyOptions& options) {
  if (scope.pile_count_max > 6 || scope.mode != PileMode::Positive) {
    throw GameError(ErrorCode::WrongLength,
                    "the scn:6,4 explorer covers positive positions of at "
                    "most six piles");
  }
  check_scope_budget(scope, options.max_total_stones);
  const auto start = Clock::now();

  ExploreReport report;
  report.rules = Rules::shrinking(4);
  report.pile_count = 6;
  report.scope = scope;
  report.p_positions = explore_generic(report.rules, scope, options);
  for (auto c : {ConjectureCategory::Small, ConjectureCategory::Pattern,
                 ConjectureCategory::Exceptional,
                 ConjectureCategory::Unclassified})
    report.category_counts[c] = 0;

  const auto& exceptions = conjecture_64_exceptions();
  std::map<std::tuple<Pile, Pile, Pile>, std::set<Pile>> bindings;
  for (const Position& pos : report.p_positions) {
    ConjectureCategory cat = ConjectureCategory::Unclassified;
    if (pos.size() < 6) {
      const bool equal5 =
          pos.size() == 5 &&
          std::all_of(pos.begin(), pos.end(), [&](Pile p) { return p == pos[0]; });
      if (pos.empty() || equal5) cat = ConjectureCategory::Small;
    } else {
      const auto fits = fit_opposite_difference_all(pos);
      if (!fits.empty()) {
        cat = ConjectureCategory::Pattern;
        for (const auto& f : fits) bindings[{f.a, f.b, f.q}].insert(f.c);
      } else if (std::binary_search(exceptions.begin(), exceptions.end(),
                                    canonicalize(pos))) {
        cat = ConjectureCategory::Exceptional;
      }
    }
    report.categories.push_back(cat);
    ++report.category_counts[cat];
    if (cat == ConjectureCategory::Unclassified)
      report.unclassified.push_back(pos);
  }
  for (const auto& [abq, cs] : bindings) {
    if (cs.size() >= 2) {
      const auto& [a, b, q] = abq;
      report.uniqueness_violations.push_back({a, b, q, cs});
    }
  }
  report.wall_time = since(start);
  return report;
}

std::vector<Position> explore_generic(const Rules& rules,
                                      const EnumerationScope& scope,
                                      const VerifyOptions& options) {
  check_scope_budget(scope, options.max_total_stones);
  CacheHandle cache(options.cache);
  const Solver solver(cache.get(), {options.max_total_stones});
  std::vector<Position> out;
  for (const auto& [pos, status] : solver.solve_space(rules, scope, options.jobs))
    if (status == Status::P) out.push_back(pos);
  return out;  // SolvedSpace iterates in sorted order
}

std::vector<Position> check_tau_correspondence(std::uint64_t sum_max) {
  std::vector<Position> failures;
  // Every composition, not just canonical representatives.
  std::vector<Pile> piles(8, 1);
  auto visit = [&](auto&& self, std::size_t slot, std::uint64_t left) -> void {
    if (slot == 8) {
      const Position pos(piles);
      if (scn86_family(pos) != p_cn86(tau(pos))) failures.push_back(pos);
      return;
    }
    for (std::uint64_t extra = 0; extra <= left; ++extra) {
      piles[slot] = static_cast<Pile>(1 + extra);
      self(self, slot + 1, left - extra);
    }
  };
  if (sum_max >= 8) visit(visit, 0, sum_max - 8);
  return failures;
}

std::vector<std::tuple<Pile, Pile, Pile>> check_decrement_remark(Pile max_m) {
  std::vector<std::tuple<Pile, Pile, Pile>> failures;
  for (Pile m = 1; m <= max_m; ++m) {
    for (Pile a = 1; a <= m; ++a) {
      if (1 + m < a) break;
      const Pile b = 1 + m - a;
      if (!(a < b && b <= m)) continue;
      if (!p_cn53(tau(Position{1, m, a, b, m}))) failures.emplace_back(a, b, m);
    }
  }
  return failures;
}

}  // namespace ringnim
