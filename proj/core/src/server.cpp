#include "rescut/server.hpp"

#include <poll.h>

#include <string>
#include <vector>

#include "rescut/errors.hpp"
#include "rescut/text.hpp"
#include "rescut/wire.hpp"
#include "socket_io.hpp"

namespace rescut {
namespace {

// Thrown on requests that violate the protocol; turned into ERR lines.
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedRequest {
  QuboInstance qubo;
  std::uint64_t budget_iters;
};

ParsedRequest read_request(detail::LineReader& reader) {
  const std::string head = reader.read_line();
  const auto tokens = text::split_ws(head);
  std::uint64_t dimension = 0, nnz = 0, budget = 0;
  if (tokens.size() != 4 || tokens[0] != "QUBO" || !text::parse_u64(tokens[1], dimension) ||
      !text::parse_u64(tokens[2], nnz) || !text::parse_u64(tokens[3], budget))
    throw RequestError("malformed header, expected 'QUBO <dimension> <nnz> <budget_iters>'");
  if (dimension == 0) throw RequestError("dimension must be positive");

  std::vector<QuboTriplet> triplets;
  triplets.reserve(nnz);
  for (std::uint64_t i = 0; i < nnz; ++i) {
    const std::string line = reader.read_line();
    if (line == wire::kTerminator)
      throw RequestError("nnz mismatch: declared " + std::to_string(nnz) + " triplets, got " +
                         std::to_string(i));
    triplets.push_back(parse_triplet(line, "<request>", i + 2));
  }
  const std::string tail = reader.read_line();
  if (tail != wire::kTerminator) {
    if (tail.empty())
      throw RequestError("missing END terminator");
    throw RequestError("nnz mismatch: more than the declared " + std::to_string(nnz) +
                       " triplet lines");
  }
  return ParsedRequest{QuboInstance(dimension, std::move(triplets)), budget};
}

}  // namespace

SolverServer::SolverServer(std::string host, std::uint16_t port, ServerConfig cfg)
    : host_(std::move(host)), requested_port_(port), cfg_(cfg) {}

SolverServer::~SolverServer() { stop(); }

std::string SolverServer::address() const {
  return host_ + ":" + std::to_string(port_);
}

void SolverServer::bind_and_listen() {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = AI_PASSIVE;
  addrinfo* list = nullptr;
  const std::string port_str = std::to_string(requested_port_);
  if (::getaddrinfo(host_.c_str(), port_str.c_str(), &hints, &list) != 0 || list == nullptr)
    throw ConfigError("cannot resolve listen address '" + host_ + "'");

  int fd = -1;
  for (addrinfo* ai = list; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 16) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(list);
  if (fd < 0)
    throw ConfigError("cannot bind/listen on " + host_ + ":" + port_str);

  sockaddr_storage bound{};
  socklen_t len = sizeof bound;
  if (::getsockname(fd, reinterpret_cast<sockaddr*>(&bound), &len) == 0 &&
      bound.ss_family == AF_INET) {
    port_ = ntohs(reinterpret_cast<sockaddr_in*>(&bound)->sin_port);
  } else {
    port_ = requested_port_;
  }
  listen_fd_ = fd;
}

void SolverServer::start() {
  bind_and_listen();
  stop_ = false;
  thread_ = std::thread([this] { accept_loop(); });
}

void SolverServer::run() {
  bind_and_listen();
  stop_ = false;
  accept_loop();
}

void SolverServer::stop() {
  stop_ = true;
  if (thread_.joinable()) thread_.join();
  if (listen_fd_ >= 0) {
    ::close(listen_fd_);
    listen_fd_ = -1;
  }
}

void SolverServer::accept_loop() {
  while (!stop_) {
    pollfd pfd{listen_fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, 100);
    if (ready <= 0) continue;
    detail::Socket conn(::accept(listen_fd_, nullptr, nullptr));
    if (!conn.valid()) continue;
    detail::set_io_timeout(conn.fd(), cfg_.io_timeout_secs);
    handle_connection(conn.fd());
  }
}

void SolverServer::handle_connection(int fd) {
  try {
    detail::LineReader reader(fd);
    ParsedRequest request = read_request(reader);

    if (cfg_.echo) {
      detail::send_all(fd, wire::format_echo(request.qubo));
      return;
    }

    SolveResult result;
    if (cfg_.solver == ServerSolver::Exact) {
      result = solve_exact(request.qubo);
    } else {
      TabuParams params;
      params.max_iters =
          request.budget_iters > 0 ? request.budget_iters : cfg_.default_budget_iters;
      result = solve_tabu(request.qubo, params, cfg_.seed);
    }
    detail::send_all(fd, wire::format_response(result.objective, result.assignment));
  } catch (const std::exception& e) {
    try {
      detail::send_all(fd, wire::format_error(e.what()));
    } catch (...) {
      // peer is gone; nothing left to report to
    }
  }
}

void serve(const std::string& listen_address, const ServerConfig& cfg) {
  auto [host, port] = detail::parse_address(listen_address);
  SolverServer server(host, port, cfg);
  server.run();
}

}  // namespace rescut
