#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ringnim/solver.hpp"

namespace ringnim {

struct ServiceConfig {
  std::uint64_t max_total_stones = 64;
  std::size_t winning_move_cap = 16;
};

struct HttpReply {
  int status = 200;
  std::string body;  // application/json
};

/// Stateless JSON API over the solver. The client owns the game state; the
/// shared cache only makes repeated queries cheaper.
///
///   POST /api/v1/status  {"variant":"scn","k":2,"piles":[1,2,1,2]}
///   POST /api/v1/apply   {..., "move":{"window_start":0,"removals":[1,1]},
///                         "reply":true}
///   GET  /api/v1/health
class GameService {
 public:
  explicit GameService(ServiceConfig config = {});

  HttpReply handle_health() const;
  HttpReply handle_status(std::string_view body) const;
  HttpReply handle_apply(std::string_view body) const;

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  ServiceConfig config_;
  mutable SolveCache cache_;
};

/// Binds the service's routes to a cpp-httplib server.
class HttpServer {
 public:
  explicit HttpServer(const GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to host:port (port 0 picks a free port). Returns the bound port,
  /// or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Requires a successful bind().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ringnim
