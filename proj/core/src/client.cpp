#include "rescut/client.hpp"

#include "rescut/text.hpp"
#include "rescut/wire.hpp"
#include "socket_io.hpp"

namespace rescut {
namespace {

detail::LineReader open_and_send(detail::Socket& sock, const std::string& address,
                                 const QuboInstance& q, std::uint64_t budget_iters,
                                 double timeout_secs, std::uint64_t& request_bytes) {
  auto [host, port] = detail::parse_address(address);
  sock = detail::connect_to(host, port, timeout_secs);
  const std::string request = wire::format_request(q, budget_iters);
  detail::send_all(sock.fd(), request);
  request_bytes = request.size();
  return detail::LineReader(sock.fd());
}

[[noreturn]] void throw_remote(const std::string& line) {
  throw RemoteError(line.size() > 4 ? line.substr(4) : "unspecified server error");
}

}  // namespace

TransferReport submit(const std::string& server_address, const QuboInstance& q,
                      std::uint64_t budget_iters, double timeout_secs) {
  TransferReport report;
  report.triplet_count = q.triplets().size();

  detail::Socket sock;
  detail::LineReader reader =
      open_and_send(sock, server_address, q, budget_iters, timeout_secs, report.request_bytes);

  const std::string head = reader.read_line();
  if (head.rfind("ERR", 0) == 0) throw_remote(head);
  const auto tokens = text::split_ws(head);
  double objective = 0.0;
  if (tokens.size() != 2 || tokens[0] != "SOLUTION" || !text::parse_double(tokens[1], objective))
    throw ProtocolError("unexpected response header: '" + head + "'");

  const std::string bits = reader.read_line();
  CutAssignment assignment = CutAssignment::from_string(bits);
  if (assignment.size() != q.dimension())
    throw ProtocolError("assignment length " + std::to_string(assignment.size()) +
                        " does not match dimension " + std::to_string(q.dimension()));
  if (reader.read_line() != wire::kTerminator)
    throw ProtocolError("response not terminated with END");
  report.response_bytes = reader.bytes_consumed();

  const double local = qubo_objective(q, assignment);
  if (objective != local)
    throw ObjectiveMismatchError("server reported " + text::format_double(objective) +
                                 " but local recomputation gives " + text::format_double(local));

  report.server_objective = objective;
  report.assignment = std::move(assignment);
  return report;
}

QuboInstance submit_echo(const std::string& server_address, const QuboInstance& q,
                         double timeout_secs) {
  detail::Socket sock;
  std::uint64_t request_bytes = 0;
  detail::LineReader reader =
      open_and_send(sock, server_address, q, 0, timeout_secs, request_bytes);

  const std::string head = reader.read_line();
  if (head.rfind("ERR", 0) == 0) throw_remote(head);
  const auto tokens = text::split_ws(head);
  std::uint64_t dimension = 0, nnz = 0;
  if (tokens.size() != 3 || tokens[0] != "ECHO" || !text::parse_u64(tokens[1], dimension) ||
      !text::parse_u64(tokens[2], nnz))
    throw ProtocolError("unexpected echo header: '" + head + "'");

  std::vector<QuboTriplet> triplets;
  triplets.reserve(nnz);
  for (std::uint64_t i = 0; i < nnz; ++i)
    triplets.push_back(parse_triplet(reader.read_line(), "<echo>", i + 2));
  if (reader.read_line() != wire::kTerminator)
    throw ProtocolError("echo response not terminated with END");
  return QuboInstance(dimension, std::move(triplets));
}

}  // namespace rescut
