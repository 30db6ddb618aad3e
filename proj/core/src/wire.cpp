#include "rescut/wire.hpp"

#include "rescut/text.hpp"

namespace rescut::wire {

std::string format_request(const QuboInstance& q, std::uint64_t budget_iters) {
  std::string msg = "QUBO " + std::to_string(q.dimension()) + " " +
                    std::to_string(q.triplets().size()) + " " +
                    std::to_string(budget_iters) + "\n";
  for (const QuboTriplet& t : q.triplets()) {
    msg += format_triplet(t);
    msg += '\n';
  }
  msg += kTerminator;
  msg += '\n';
  return msg;
}

std::string format_response(double objective, const CutAssignment& assignment) {
  std::string msg = "SOLUTION " + text::format_double(objective) + "\n";
  msg += assignment.to_string();
  msg += '\n';
  msg += kTerminator;
  msg += '\n';
  return msg;
}

std::string format_echo(const QuboInstance& q) {
  std::string msg = "ECHO " + std::to_string(q.dimension()) + " " +
                    std::to_string(q.triplets().size()) + "\n";
  for (const QuboTriplet& t : q.triplets()) {
    msg += format_triplet(t);
    msg += '\n';
  }
  msg += kTerminator;
  msg += '\n';
  return msg;
}

std::string format_error(std::string_view message) {
  std::string clean;
  clean.reserve(message.size());
  for (char c : message)
    clean += (c == '\n' || c == '\r') ? ' ' : c;
  return "ERR " + clean + "\n";
}

}  // namespace rescut::wire
