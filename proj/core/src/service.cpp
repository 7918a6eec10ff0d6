#include "ringnim/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "ringnim/error.hpp"

namespace ringnim {

using Json = nlohmann::ordered_json;

namespace {

struct ApiError {
  int http_status;
  std::string error;
  std::string reason;
  std::string message;
};

HttpReply reply_json(int status, const Json& j) {
  return {status, j.dump() + "\n"};
}

HttpReply reply_error(const ApiError& e) {
  Json j;
  j["error"] = e.error;
  if (!e.reason.empty()) j["reason"] = e.reason;
  j["message"] = e.message;
  return reply_json(e.http_status, j);
}

Json piles_json(const Position& pos) {
  Json arr = Json::array();
  for (Pile p : pos) arr.push_back(p);
  return arr;
}

std::vector<Pile> read_piles(const Json& j, const char* field) {
  if (!j.is_array())
    throw ApiError{400, "invalid-request", "", std::string(field) + " must be an array"};
  std::vector<Pile> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<Pile>::max())
      throw ApiError{400, "invalid-position", "", std::string(field) +
                                                      " must hold non-negative integers"};
    out.push_back(static_cast<Pile>(v.get<std::int64_t>()));
  }
  return out;
}

struct Request {
  Rules rules;
  Position piles;
  Json body;
};

Request parse_request(std::string_view body, std::uint64_t max_total) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ApiError{400, "invalid-request", "", "body is not a JSON object"};

  Request req;
  const std::string variant = j.value("variant", std::string{});
  if (variant == "scn") req.rules.variant = Variant::Shrinking;
  else if (variant == "cn") req.rules.variant = Variant::Static;
  else throw ApiError{400, "invalid-request", "", "variant must be \"cn\" or \"scn\""};

  if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<std::int64_t>() < 1)
    throw ApiError{400, "invalid-request", "", "k must be a positive integer"};
  req.rules.k = static_cast<unsigned>(j["k"].get<std::int64_t>());

  if (!j.contains("piles"))
    throw ApiError{400, "invalid-request", "", "piles is required"};
  req.piles = Position(read_piles(j["piles"], "piles"));

  if (req.rules.variant == Variant::Shrinking && !req.piles.all_positive())
    throw ApiError{400, "invalid-position", "", "scn piles must be positive"};
  if (req.rules.variant == Variant::Static && req.piles.size() < req.rules.k)
    throw ApiError{400, "invalid-position", "",
                   "cn needs at least k piles on the circle"};
  if (req.piles.total() > max_total)
    throw ApiError{422, "budget-exceeded", "",
                   "total stones " + std::to_string(req.piles.total()) +
                       " exceed the server limit of " + std::to_string(max_total)};
  req.body = std::move(j);
  return req;
}

Json move_json(const Rules& rules, const Position& from, const Successor& s) {
  Json j;
  j["window_start"] = s.move.window_start;
  j["removals"] = s.move.removals;
  j["result"] = piles_json(apply_move(rules, from, s.move));
  j["canonical"] = piles_json(s.position);
  return j;
}

// canonical / status / winning_moves for a position.
Json describe(const Solver& solver, const Rules& rules, const Position& pos,
              std::size_t cap) {
  Json j;
  j["canonical"] = piles_json(canonicalize(pos));
  const Status status = solver.status(rules, pos);
  j["status"] = std::string(1, to_char(status));
  Json moves = Json::array();
  std::size_t total = 0;
  if (status == Status::N) {
    for (const Successor& s : solver.winning_moves(rules, pos)) {
      if (moves.size() < cap) moves.push_back(move_json(rules, pos, s));
      ++total;
    }
  }
  j["winning_moves"] = std::move(moves);
  j["winning_moves_total"] = total;
  return j;
}

template <class Fn>
HttpReply guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ApiError& e) {
    return reply_error(e);
  } catch (const GameError& e) {
    const int code = e.code() == ErrorCode::BudgetExceeded ? 422 : 400;
    return reply_error({code, std::string(to_string(e.code())), "", e.what()});
  } catch (const std::exception& e) {
    return reply_error({500, "internal", "", e.what()});
  }
}

}  // namespace

GameService::GameService(ServiceConfig config) : config_(config) {}

HttpReply GameService::handle_health() const {
  return reply_json(200, Json{{"ok", true}});
}

HttpReply GameService::handle_status(std::string_view body) const {
  return guarded([&] {
    const Request req = parse_request(body, config_.max_total_stones);
    const Solver solver(cache_, {config_.max_total_stones});
    return reply_json(200, describe(solver, req.rules, req.piles,
                                    config_.winning_move_cap));
  });
}

HttpReply GameService::handle_apply(std::string_view body) const {
  return guarded([&] {
    const Request req = parse_request(body, config_.max_total_stones);
    const Json& j = req.body;
    if (!j.contains("move") || !j["move"].is_object())
      throw ApiError{400, "invalid-request", "", "move is required"};
    const Json& mj = j["move"];
    if (!mj.contains("window_start") || !mj["window_start"].is_number_integer() ||
        mj["window_start"].get<std::int64_t>() < 0)
      throw ApiError{400, "illegal-move", "invalid-window",
                     "window_start must be a non-negative integer"};
    Move mv;
    mv.window_start = static_cast<std::size_t>(mj["window_start"].get<std::int64_t>());
    if (!mj.contains("removals"))
      throw ApiError{400, "illegal-move", "wrong-removal-length", "removals is required"};
    mv.removals = read_piles(mj["removals"], "removals");
    if (auto reason = illegal_reason(req.rules, req.piles, mv)) {
      throw ApiError{400, "illegal-move", *reason,
                     "move " + format_move(mv) + " is illegal on " +
                         display_position(req.piles)};
    }

    const Solver solver(cache_, {config_.max_total_stones});
    Json out = describe(solver, req.rules, req.piles, config_.winning_move_cap);
    const Position result = apply_move(req.rules, req.piles, mv);
    const Status result_status = solver.status(req.rules, result);
    out["applied"] = {{"result", piles_json(result)},
                      {"canonical", piles_json(canonicalize(result))},
                      {"status", std::string(1, to_char(result_status))}};
    if (j.value("reply", false)) {
      if (is_terminal(req.rules, result)) {
        out["reply"] = nullptr;
      } else {
        const auto best = solver.best_move(req.rules, result);
        Json r = move_json(req.rules, result, *best);
        r["status"] = std::string(
            1, to_char(solver.status(req.rules, best->position)));
        out["reply"] = std::move(r);
      }
    }
    return reply_json(200, out);
  });
}

struct HttpServer::Impl {
  explicit Impl(const GameService& s) : service(s) {}
  const GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(const GameService& service)
    : impl_(std::make_unique<Impl>(service)) {
  auto send = [](httplib::Response& res, const HttpReply& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  auto& svc = impl_->service;
  impl_->server.Get("/api/v1/health",
                    [&svc, send](const httplib::Request&, httplib::Response& res) {
                      send(res, svc.handle_health());
                    });
  impl_->server.Post("/api/v1/status",
                     [&svc, send](const httplib::Request& req, httplib::Response& res) {
                       send(res, svc.handle_status(req.body));
                     });
  impl_->server.Post("/api/v1/apply",
                     [&svc, send](const httplib::Request& req, httplib::Response& res) {
                       send(res, svc.handle_apply(req.body));
                     });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace ringnim
