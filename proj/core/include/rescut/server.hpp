#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

#include "rescut/solve.hpp"

namespace rescut {

enum class ServerSolver { Tabu, Exact };

struct ServerConfig {
  ServerSolver solver = ServerSolver::Tabu;
  std::uint64_t seed = 1;
  /// Used when a request carries a budget of 0.
  std::uint64_t default_budget_iters = 100000;
  /// Reply with the parsed instance instead of solving (debug).
  bool echo = false;
  double io_timeout_secs = 30.0;
};

/// Line-protocol QUBO service: per connection, one request is read, one
/// response is written, the connection is closed. Connections are
/// handled sequentially and solver state never outlives a connection.
/// The server only ever sees the QUBO, never the source graph.
class SolverServer {
 public:
  /// Port 0 binds an ephemeral port; port() reports the real one once
  /// the server is listening.
  SolverServer(std::string host, std::uint16_t port, ServerConfig cfg);
  ~SolverServer();

  SolverServer(const SolverServer&) = delete;
  SolverServer& operator=(const SolverServer&) = delete;

  /// Binds and serves on a background thread; returns once listening.
  void start();
  /// Binds and serves on the calling thread until stop().
  void run();
  void stop();

  std::uint16_t port() const { return port_; }
  std::string address() const;

 private:
  void bind_and_listen();
  void accept_loop();
  void handle_connection(int fd);

  std::string host_;
  std::uint16_t requested_port_;
  ServerConfig cfg_;
  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  std::atomic<bool> stop_{false};
  std::thread thread_;
};

/// Blocking convenience wrapper around SolverServer for the CLI;
/// `listen_address` is "host:port".
void serve(const std::string& listen_address, const ServerConfig& cfg);

}  // namespace rescut
