#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rescut/graph.hpp"
#include "rescut/qubo.hpp"

namespace rescut::wire {

// All messages are '\n'-terminated ASCII lines.
//
//   request:   "QUBO <dimension> <nnz> <budget_iters>"
//              nnz lines "u v value"            (0-indexed, shortest decimal)
//              "END"
//   response:  "SOLUTION <objective>"
//              one line of `dimension` characters over {0,1}
//              "END"
//   error:     "ERR <message>"                  (single line)
//   echo:      "ECHO <dimension> <nnz>"         (debug mode)
//              nnz lines "u v value"
//              "END"

std::string format_request(const QuboInstance& q, std::uint64_t budget_iters);
std::string format_response(double objective, const CutAssignment& assignment);
std::string format_echo(const QuboInstance& q);
std::string format_error(std::string_view message);

inline constexpr std::string_view kTerminator = "END";

}  // namespace rescut::wire
