#include <json.hpp>

#include "ringnim/verifier.hpp"

namespace ringnim {

using Json = nlohmann::ordered_json;

namespace {

Json piles_json(const Position& pos) {
  Json arr = Json::array();
  for (Pile p : pos) arr.push_back(p);
  return arr;
}

Json scope_json(const EnumerationScope& scope) {
  Json j;
  j["pile_min"] = scope.pile_count_min;
  j["pile_max"] = scope.pile_count_max;
  j["sum_max"] = scope.highest_sum();
  if (scope.exact_sum) j["exact_sum"] = *scope.exact_sum;
  return j;
}

std::string status_text(Status s) { return std::string(1, to_char(s)); }

}  // namespace

std::string to_json(const VerifyReport& report) {
  Json j;
  j["classifier"] = report.classifier.name();
  j["scope"] = scope_json(report.scope);
  j["positions_checked"] = report.positions_checked;
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    Json entry;
    entry["position"] = piles_json(m.position);
    entry["oracle"] = status_text(m.oracle);
    entry["classifier"] = m.classifier;
    mismatches.push_back(std::move(entry));
  }
  j["mismatches"] = std::move(mismatches);
  j["wall_time_ms"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

std::string to_json(const ExploreReport& report) {
  Json j;
  j["game"] = {{"variant", variant_name(report.rules.variant)},
               {"k", report.rules.k},
               {"pile_count", report.pile_count}};
  j["scope"] = scope_json(report.scope);
  j["reading"] = kConjecture64Reading;
  Json positions = Json::array();
  for (std::size_t i = 0; i < report.p_positions.size(); ++i) {
    Json entry;
    entry["position"] = piles_json(report.p_positions[i]);
    entry["category"] = std::string(to_string(report.categories[i]));
    positions.push_back(std::move(entry));
  }
  j["p_positions"] = std::move(positions);
  Json counts;
  for (const auto& [cat, n] : report.category_counts)
    counts[std::string(to_string(cat))] = n;
  j["categories"] = std::move(counts);
  Json violations = Json::array();
  for (const auto& v : report.uniqueness_violations) {
    Json entry;
    entry["a"] = v.a;
    entry["b"] = v.b;
    entry["q"] = v.q;
    entry["c"] = v.c_values;
    violations.push_back(std::move(entry));
  }
  j["uniqueness_violations"] = std::move(violations);
  Json unclassified = Json::array();
  for (const auto& p : report.unclassified) unclassified.push_back(piles_json(p));
  j["unclassified"] = std::move(unclassified);
  j["wall_time_ms"] = report.wall_time.count();
  return j.dump(2) + "\n";
}

std::string to_json(const std::vector<NamedCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json entry;
    entry["label"] = c.label;
    entry["variant"] = variant_name(c.rules.variant);
    entry["k"] = c.rules.k;
    entry["position"] = piles_json(c.position);
    entry["expected"] = status_text(c.expected);
    entry["actual"] = status_text(c.actual);
    entry["pass"] = c.pass;
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace ringnim
