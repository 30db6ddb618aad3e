#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rescut/graph.hpp"
#include "rescut/qubo.hpp"

namespace rescut {

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Could not reach the server, or it hung up mid-message.
class ConnectError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

/// The server did not answer within the I/O timeout.
class TimeoutError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

/// The server answered with an ERR line; carries its message.
class RemoteError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

/// The reported objective differs from the local recomputation.
class ObjectiveMismatchError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

/// Byte-level accounting of one submission round trip.
struct TransferReport {
  std::uint64_t request_bytes = 0;
  std::uint64_t response_bytes = 0;
  std::size_t triplet_count = 0;
  double server_objective = 0.0;
  CutAssignment assignment = CutAssignment::zeros(0);
};

/// Sends exactly the nonzero triplets to `host:port`, waits for the
/// solution, verifies the reported objective against a local
/// qubo_objective recomputation (exact double equality) and counts the
/// bytes moved in both directions.
TransferReport submit(const std::string& server_address, const QuboInstance& q,
                      std::uint64_t budget_iters, double timeout_secs = 30.0);

/// Debug round trip against a server running in echo mode; returns the
/// instance exactly as the server reconstructed it.
QuboInstance submit_echo(const std::string& server_address, const QuboInstance& q,
                         double timeout_secs = 30.0);

}  // namespace rescut
