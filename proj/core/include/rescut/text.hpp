#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rescut::text {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Strict full-token parses; return false on trailing garbage, overflow
/// or empty input.
bool parse_double(std::string_view token, double& out);
bool parse_u64(std::string_view token, std::uint64_t& out);

/// Splits on runs of spaces/tabs; never returns empty tokens.
std::vector<std::string_view> split_ws(std::string_view line);

}  // namespace rescut::text
