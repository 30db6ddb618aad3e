#include <string>
#include <thread>

#include "doctest.h"
#include "rescut/client.hpp"
#include "rescut/generator.hpp"
#include "rescut/qubo.hpp"
#include "rescut/server.hpp"
#include "rescut/wire.hpp"
#include "socket_io.hpp"
#include "test_util.hpp"

using namespace rescut;

namespace {

QuboInstance triangle_qubo() {
  return compile_qubo(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}));
}

// Raw exchange that bypasses the client, for protocol-violation tests.
std::string raw_exchange(std::uint16_t port, const std::string& payload) {
  detail::Socket sock = detail::connect_to("127.0.0.1", port, 5.0);
  detail::send_all(sock.fd(), payload);
  std::string response;
  char chunk[4096];
  for (;;) {
    const ssize_t r = ::recv(sock.fd(), chunk, sizeof chunk, 0);
    if (r <= 0) break;
    response.append(chunk, static_cast<std::size_t>(r));
  }
  return response;
}

}  // namespace

TEST_CASE("submit solves the triangle through the wire") {
  SolverServer server("127.0.0.1", 0, ServerConfig{});
  server.start();

  QuboInstance q = triangle_qubo();
  TransferReport report = submit(server.address(), q, 1000);
  CHECK(report.server_objective == 2.0);
  CHECK(report.triplet_count == 6);
  CHECK(report.request_bytes == wire::format_request(q, 1000).size());
  CHECK(report.request_bytes >= report.triplet_count);
  CHECK(report.response_bytes > 0);
  CHECK(qubo_objective(q, report.assignment) == report.server_objective);

  server.stop();
}

TEST_CASE("an exact-solver server certifies small instances") {
  ServerConfig cfg;
  cfg.solver = ServerSolver::Exact;
  SolverServer server("127.0.0.1", 0, cfg);
  server.start();

  TransferReport report = submit(server.address(), triangle_qubo(), 0);
  CHECK(report.server_objective == 2.0);

  // Oversized instances must be refused, not silently downgraded.
  WeightedGraph big = generate_instance(InstanceKind::G05, 40, 0.3, 1, 5);
  CHECK_THROWS_AS(submit(server.address(), compile_qubo(big), 0), RemoteError);

  server.stop();
}

TEST_CASE("empty payloads are legal: isolated nodes, zero triplets") {
  SolverServer server("127.0.0.1", 0, ServerConfig{});
  server.start();

  QuboInstance empty = compile_qubo(WeightedGraph(6, {}));
  TransferReport report = submit(server.address(), empty, 50);
  CHECK(report.triplet_count == 0);
  CHECK(report.server_objective == 0.0);
  CHECK(report.assignment.size() == 6);

  server.stop();
}

TEST_CASE("echo mode reconstructs the instance triplet for triplet") {
  ServerConfig cfg;
  cfg.echo = true;
  SolverServer server("127.0.0.1", 0, cfg);
  server.start();

  std::mt19937_64 rng(90210);
  for (int round = 0; round < 5; ++round) {
    WeightedGraph g = testutil::random_real_graph(rng, 3 + rng() % 25, 0.5);
    if (g.edge_count() == 0) continue;
    QuboInstance q = compile_qubo(g);
    QuboInstance back = submit_echo(server.address(), q);
    CHECK(back == q);
  }

  server.stop();
}

TEST_CASE("nnz mismatch draws an ERR response") {
  SolverServer server("127.0.0.1", 0, ServerConfig{});
  server.start();

  // Declares 5 triplets but sends 3.
  const std::string payload = "QUBO 3 5 100\n0 0 2\n0 1 -1\n1 1 2\nEND\n";
  const std::string response = raw_exchange(server.port(), payload);
  CHECK(response.rfind("ERR ", 0) == 0);
  CHECK(response.find("nnz mismatch") != std::string::npos);
  CHECK(response.find('\n') == response.size() - 1);  // single line

  // Declares 1 but sends 3.
  const std::string over = raw_exchange(server.port(), "QUBO 3 1 100\n0 0 2\n0 1 -1\n1 1 2\nEND\n");
  CHECK(over.rfind("ERR ", 0) == 0);

  server.stop();
}

TEST_CASE("malformed requests draw a single ERR line") {
  SolverServer server("127.0.0.1", 0, ServerConfig{});
  server.start();

  const std::string payloads[] = {
      "HELLO\n",
      "QUBO x y z\n",
      "QUBO 3 1 10\nnot a triplet\nEND\n",
      "QUBO 2 1 10\n0 1 0\nEND\n",   // zero value
      "QUBO 2 1 10\n0 5 1\nEND\n"};  // index out of range
  for (const std::string& payload : payloads) {
    const std::string response = raw_exchange(server.port(), payload);
    CHECK(response.rfind("ERR ", 0) == 0);
    CHECK(response.find('\n') == response.size() - 1);
  }

  server.stop();
}

TEST_CASE("client surfaces connection failures distinctly") {
  // Grab an ephemeral port, then shut the listener down so nothing is there.
  std::uint16_t dead_port = 0;
  {
    SolverServer probe("127.0.0.1", 0, ServerConfig{});
    probe.start();
    dead_port = probe.port();
    probe.stop();
  }
  CHECK_THROWS_AS(
      submit("127.0.0.1:" + std::to_string(dead_port), triangle_qubo(), 10, 2.0),
      ConnectError);
  CHECK_THROWS_AS(submit("not-an-address", triangle_qubo(), 10, 2.0), ConnectError);
}

TEST_CASE("client times out when the server never answers") {
  // Listening socket that is never accepted from: the request lands in
  // the kernel buffer and no response ever comes.
  detail::Socket listener(::socket(AF_INET, SOCK_STREAM, 0));
  REQUIRE(listener.valid());
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  REQUIRE(::bind(listener.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0);
  REQUIRE(::listen(listener.fd(), 1) == 0);
  socklen_t len = sizeof addr;
  REQUIRE(::getsockname(listener.fd(), reinterpret_cast<sockaddr*>(&addr), &len) == 0);
  const std::uint16_t port = ntohs(addr.sin_port);

  CHECK_THROWS_AS(
      submit("127.0.0.1:" + std::to_string(port), triangle_qubo(), 10, 0.3),
      TimeoutError);
}

TEST_CASE("responses are verified against the local objective") {
  // A fake server that reports a wrong objective for a valid assignment.
  detail::Socket listener(::socket(AF_INET, SOCK_STREAM, 0));
  REQUIRE(listener.valid());
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  REQUIRE(::bind(listener.fd(), reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0);
  REQUIRE(::listen(listener.fd(), 1) == 0);
  socklen_t len = sizeof addr;
  REQUIRE(::getsockname(listener.fd(), reinterpret_cast<sockaddr*>(&addr), &len) == 0);
  const std::uint16_t port = ntohs(addr.sin_port);

  std::thread fake([&] {
    detail::Socket conn(::accept(listener.fd(), nullptr, nullptr));
    if (!conn.valid()) return;
    detail::LineReader reader(conn.fd());
    while (reader.read_line() != wire::kTerminator) {
    }
    detail::send_all(conn.fd(), "SOLUTION 999\n100\nEND\n");
  });

  CHECK_THROWS_AS(
      submit("127.0.0.1:" + std::to_string(port), triangle_qubo(), 10, 5.0),
      ObjectiveMismatchError);
  fake.join();
}
