#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ringnim/classifiers.hpp"
#include "ringnim/error.hpp"
#include "ringnim/moves.hpp"
#include "ringnim/service.hpp"
#include "ringnim/solver.hpp"
#include "ringnim/verifier.hpp"

namespace ringnim::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string variant = "scn";
  unsigned k = 2;
  std::string piles;
  std::string classifier;
  std::string game;
  std::optional<std::uint64_t> sum_max;
  std::optional<unsigned> pile_min;
  std::optional<unsigned> pile_max;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out_path;
  int port = 8080;
  std::string host = "0.0.0.0";
  std::uint64_t max_total_stones = 64;
  bool engine_first = false;
};

Rules parse_rules(const Options& o) {
  if (o.variant == "scn") return Rules::shrinking(o.k);
  if (o.variant == "cn") return Rules::circular(o.k);
  throw GameError(ErrorCode::ParseError, "--variant must be cn or scn");
}

Position parse_game_position(const Rules& rules, const std::string& text) {
  Position pos = parse_position(text);
  if (rules.variant == Variant::Shrinking && !pos.all_positive())
    throw GameError(ErrorCode::InvalidPosition, "scn piles must be positive");
  if (rules.variant == Variant::Static && pos.size() < rules.k)
    throw GameError(ErrorCode::InvalidPosition,
                    "cn needs at least k piles on the circle");
  return pos;
}

// "scn:6,3" -> rules with k=3 and pile bound 6.
std::pair<Rules, unsigned> parse_game(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',');
  if (colon == std::string::npos || comma == std::string::npos || comma < colon)
    throw GameError(ErrorCode::ParseError, "game must look like scn:6,3");
  const std::string variant = text.substr(0, colon);
  unsigned n = 0;
  unsigned k = 0;
  try {
    n = static_cast<unsigned>(std::stoul(text.substr(colon + 1, comma - colon - 1)));
    k = static_cast<unsigned>(std::stoul(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw GameError(ErrorCode::ParseError, "game must look like scn:6,3");
  }
  if (k == 0) throw GameError(ErrorCode::ParseError, "k must be positive");
  if (variant == "scn") return {Rules::shrinking(k), n};
  if (variant == "cn") return {Rules::circular(k), n};
  throw GameError(ErrorCode::ParseError, "game variant must be cn or scn");
}

Json piles_json(const Position& pos) {
  Json arr = Json::array();
  for (Pile p : pos) arr.push_back(p);
  return arr;
}

Json successor_json(const Rules& rules, const Position& from, const Successor& s) {
  return Json{{"window_start", s.move.window_start},
              {"removals", s.move.removals},
              {"result", piles_json(apply_move(rules, from, s.move))},
              {"canonical", piles_json(s.position)}};
}

std::string successor_text(const Rules& rules, const Position& from,
                           const Successor& s) {
  return format_move(s.move) + " -> " +
         display_position(apply_move(rules, from, s.move));
}

// Writes to --out when given, else to the command's stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw std::runtime_error("cannot open " + o.out_path);
  file << text;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Rules rules = parse_rules(o);
  const Position pos = parse_game_position(rules, o.piles);
  SolveCache cache;
  const Solver solver(cache, {o.max_total_stones});
  const Status status = solver.status(rules, pos);
  std::optional<Successor> best;
  if (!is_terminal(rules, pos)) best = solver.best_move(rules, pos);

  if (o.format == "json") {
    Json j{{"variant", variant_name(rules.variant)},
           {"k", rules.k},
           {"position", piles_json(pos)},
           {"canonical", piles_json(canonicalize(pos))},
           {"status", std::string(1, to_char(status))}};
    j["best_move"] = (status == Status::N && best)
                         ? successor_json(rules, pos, *best)
                         : Json(nullptr);
    emit(o, out, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream text;
  text << to_char(status) << "\n";
  if (status == Status::N && best)
    text << "best: " << successor_text(rules, pos, *best) << "\n";
  emit(o, out, text.str());
  return kOk;
}

int cmd_moves(const Options& o, std::ostream& out) {
  const Rules rules = parse_rules(o);
  const Position pos = parse_game_position(rules, o.piles);
  SolveCache cache;
  const Solver solver(cache, {o.max_total_stones});
  const Status status = solver.status(rules, pos);
  const auto moves = solver.winning_moves(rules, pos);

  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& s : moves) arr.push_back(successor_json(rules, pos, s));
    Json j{{"variant", variant_name(rules.variant)},
           {"k", rules.k},
           {"position", piles_json(pos)},
           {"status", std::string(1, to_char(status))},
           {"winning_moves", std::move(arr)}};
    emit(o, out, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream text;
  text << to_char(status) << "\n";
  for (const auto& s : moves) text << successor_text(rules, pos, s) << "\n";
  emit(o, out, text.str());
  return kOk;
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream os;
  os << r.classifier.name() << ": " << r.positions_checked
     << " positions, piles " << r.scope.pile_count_min << ".."
     << r.scope.pile_count_max << ", sum <= " << r.scope.highest_sum() << ", "
     << r.mismatches.size() << " mismatches, " << r.wall_time.count()
     << " ms\n";
  for (const auto& m : r.mismatches) {
    os << "  " << display_position(m.position) << " oracle="
       << to_char(m.oracle) << " classifier=" << (m.classifier ? "P" : "N")
       << "\n";
  }
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo{o.jobs, o.max_total_stones, nullptr};
  std::vector<ClassifierId> ids;
  const bool suite = o.classifier.empty();
  if (suite) ids = all_classifiers();
  else ids.push_back(ClassifierId::parse(o.classifier));

  bool ok = true;
  Json reports = Json::array();
  std::ostringstream text;
  for (const auto& id : ids) {
    EnumerationScope scope = id.default_scope(o.sum_max.value_or(default_sum_max(id)));
    if (o.pile_min) scope.pile_count_min = *o.pile_min;
    if (o.pile_max) scope.pile_count_max = *o.pile_max;
    const VerifyReport report = verify(id, scope, vo);
    ok = ok && report.passed();
    if (suite) reports.push_back(Json::parse(to_json(report)));
    else if (o.format == "json") text << to_json(report);
    if (o.format != "json") text << verify_text(report);
  }
  if (suite) {
    const auto named = check_named_positions(vo);
    const auto tau_failures = check_tau_correspondence(18);
    const auto remark_failures = check_decrement_remark(30);
    for (const auto& c : named) ok = ok && c.pass;
    ok = ok && tau_failures.empty() && remark_failures.empty();
    if (o.format == "json") {
      Json j;
      j["reports"] = std::move(reports);
      j["named_positions"] = Json::parse(to_json(named));
      j["invariants"] = {{"tau_correspondence_failures", tau_failures.size()},
                         {"decrement_remark_failures", remark_failures.size()}};
      text << j.dump(2) << "\n";
    } else {
      for (const auto& c : named) {
        text << (c.pass ? "pass " : "FAIL ") << c.label << " "
             << display_position(c.position) << " expected "
             << to_char(c.expected) << " got " << to_char(c.actual) << "\n";
      }
      text << "tau correspondence (8 piles, sum <= 18): "
           << tau_failures.size() << " failures\n";
      text << "decrement remark (M <= 30): " << remark_failures.size()
           << " failures\n";
    }
  }
  emit(o, out, text.str());
  return ok ? kOk : kMismatch;
}

int cmd_explore(const Options& o, std::ostream& out) {
  Rules rules;
  unsigned n = 0;
  if (!o.game.empty()) {
    std::tie(rules, n) = parse_game(o.game);
  } else {
    rules = parse_rules(o);
    n = o.pile_max.value_or(6);
  }
  const std::uint64_t sum_max = o.sum_max.value_or(20);
  const bool shrinking = rules.variant == Variant::Shrinking;
  EnumerationScope scope = EnumerationScope::up_to(
      EnumerationScope::mode_for(rules.variant), shrinking ? 0 : n, n, sum_max);
  if (o.pile_min) scope.pile_count_min = *o.pile_min;
  if (o.pile_max) scope.pile_count_max = *o.pile_max;
  const VerifyOptions vo{o.jobs, o.max_total_stones, nullptr};

  if (shrinking && rules.k == 4 && n == 6) {
    const ExploreReport report = explore_conjecture_64(scope, vo);
    if (o.format == "json") {
      emit(o, out, to_json(report));
      return kOk;
    }
    std::ostringstream text;
    text << "scn:6,4 sum <= " << sum_max << ": " << report.p_positions.size()
         << " P-positions\n";
    for (const auto& [cat, count] : report.category_counts)
      text << "  category " << to_string(cat) << ": " << count << "\n";
    text << "  uniqueness violations: " << report.uniqueness_violations.size()
         << "\n";
    for (const auto& v : report.uniqueness_violations) {
      text << "    (a,b,q)=(" << v.a << "," << v.b << "," << v.q << ") c in {";
      bool first = true;
      for (Pile c : v.c_values) {
        text << (first ? "" : ",") << c;
        first = false;
      }
      text << "}\n";
    }
    for (const auto& p : report.unclassified)
      text << "  unclassified " << display_position(p) << "\n";
    emit(o, out, text.str());
    return kOk;
  }

  const auto positions = explore_generic(rules, scope, vo);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& p : positions) arr.push_back(piles_json(p));
    Json j{{"game", {{"variant", variant_name(rules.variant)},
                     {"k", rules.k},
                     {"pile_count", n}}},
           {"scope", {{"pile_min", scope.pile_count_min},
                      {"pile_max", scope.pile_count_max},
                      {"sum_max", sum_max}}},
           {"p_positions", std::move(arr)}};
    emit(o, out, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream text;
  for (const auto& p : positions) text << display_position(p) << "\n";
  emit(o, out, text.str());
  return kOk;
}

void show_board(std::ostream& out, const Position& pos) {
  out << "board:";
  if (pos.empty()) out << " (empty)";
  for (std::size_t i = 0; i < pos.size(); ++i) out << " [" << i << "]=" << pos[i];
  out << "\n";
}

// Human input: "<window_start> <r1,r2,...>".
std::optional<Move> read_move(const std::string& line, std::string& error) {
  std::istringstream is(line);
  long long start = -1;
  std::string removals;
  if (!(is >> start >> removals) || start < 0) {
    error = "expected '<window_start> <r1,r2,...>'";
    return std::nullopt;
  }
  try {
    Position r = parse_position(removals);
    return Move{static_cast<std::size_t>(start), r.vector()};
  } catch (const GameError& e) {
    error = e.what();
    return std::nullopt;
  }
}

std::string explain(const std::string& reason) {
  if (reason == "zero-total") return "must remove at least one stone";
  if (reason == "invalid-window") return "no window starts there";
  if (reason == "wrong-removal-length") return "give one amount per pile in the window";
  if (reason == "removal-exceeds-pile") return "cannot take more stones than a pile holds";
  return reason;
}

int cmd_play(const Options& o, std::istream& in, std::ostream& out) {
  const Rules rules = parse_rules(o);
  Position pos = parse_game_position(rules, o.piles);
  SolveCache cache;
  const Solver solver(cache, {o.max_total_stones});
  solver.status(rules, pos);  // fail fast on budget

  out << variant_name(rules.variant) << " k=" << rules.k << "; a window is "
      << "min(k, piles) consecutive piles starting at an index and running "
      << "forward.\n";
  bool human_turn = !o.engine_first;
  while (!is_terminal(rules, pos)) {
    show_board(out, pos);
    if (human_turn) {
      out << "position is " << to_char(solver.status(rules, pos))
          << " for you. your move (<start> <r1,r2,...>, or quit): " << std::flush;
      std::string line;
      if (!std::getline(in, line) || line == "quit" || line == "q") {
        out << "\nbye\n";
        return kOk;
      }
      std::string error;
      auto mv = read_move(line, error);
      if (!mv) {
        out << "cannot read move: " << error << "\n";
        continue;
      }
      if (auto reason = illegal_reason(rules, pos, *mv)) {
        out << "illegal move: " << explain(*reason) << "\n";
        continue;
      }
      pos = apply_move(rules, pos, *mv);
    } else {
      const auto best = solver.best_move(rules, pos);
      out << "engine plays " << format_move(best->move) << "\n";
      pos = apply_move(rules, pos, best->move);
    }
    human_turn = !human_turn;
  }
  show_board(out, pos);
  out << (human_turn ? "engine wins\n" : "you win\n");
  return kOk;
}

int cmd_serve(const Options& o, std::ostream& out) {
  GameService service({o.max_total_stones, 16});
  HttpServer server(service);
  const int port = server.bind(o.host, o.port);
  if (port < 0) throw std::runtime_error("cannot bind port " + std::to_string(o.port));
  out << "listening on " << o.host << ":" << port << std::endl;
  return server.listen() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Circular Nim and Shrinking Circular Nim solver", "ringnim"};
  app.require_subcommand(1);

  auto add_rules = [&](CLI::App* cmd) {
    cmd->add_option("--variant", o.variant, "cn or scn")
        ->check(CLI::IsMember({"cn", "scn"}));
    cmd->add_option("-k", o.k, "window size")->check(CLI::PositiveNumber);
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-total-stones", o.max_total_stones,
                    "solve budget in stones")
        ->envname("RINGNIM_MAX_SUM");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out_path, "write output to a file");
  };
  auto add_scope = [&](CLI::App* cmd) {
    cmd->add_option("--sum-max", o.sum_max, "largest stone total");
    cmd->add_option("--pile-min", o.pile_min, "smallest pile count");
    cmd->add_option("--pile-max", o.pile_max, "largest pile count");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "print P/N status and a best move");
  add_rules(solve);
  solve->add_option("--piles", o.piles, "e.g. 5,3,1,6,4")->required();
  add_format(solve);
  add_budget(solve);

  auto* moves = app.add_subcommand("moves", "print every winning move");
  add_rules(moves);
  moves->add_option("--piles", o.piles, "e.g. 5,3,1,6,4")->required();
  add_format(moves);
  add_budget(moves);

  auto* verify_cmd = app.add_subcommand(
      "verify", "compare a closed-form classifier with the exhaustive oracle");
  verify_cmd->add_option("--classifier", o.classifier,
                         "e.g. scn:4,2 or cn:moore:3; omit for the full suite");
  add_scope(verify_cmd);
  add_format(verify_cmd);
  add_budget(verify_cmd);

  auto* explore = app.add_subcommand("explore", "list oracle P-positions");
  explore->add_option("--game", o.game, "e.g. scn:6,4 (variant:n,k)");
  add_rules(explore);
  add_scope(explore);
  add_format(explore);
  add_budget(explore);

  auto* play = app.add_subcommand("play", "play against the engine");
  add_rules(play);
  play->add_option("--piles", o.piles, "starting position")->required();
  play->add_flag("--engine-first", o.engine_first, "engine moves first");
  add_budget(play);

  auto* serve = app.add_subcommand("serve", "start the HTTP service");
  serve->add_option("--port", o.port, "listen port");
  serve->add_option("--host", o.host, "listen address");
  add_budget(serve);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(o, out);
    if (*moves) return cmd_moves(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*explore) return cmd_explore(o, out);
    if (*play) return cmd_play(o, in, out);
    if (*serve) return cmd_serve(o, out);
  } catch (const GameError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace ringnim::cli
