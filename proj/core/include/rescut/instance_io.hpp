#pragma once

#include <iosfwd>
#include <string>

#include "rescut/graph.hpp"

namespace rescut {

/// Reads a maxcut instance: optional '#' comment lines, a `n m` header,
/// then m lines `u v w` with 1-based endpoints and decimal weights.
/// Weights are stored as absolute values; zero-weight edges and
/// self-loops are dropped and duplicate pairs merged, so the stored
/// edge count may be below m. Throws ParseError naming the offending
/// line.
WeightedGraph load_instance(const std::string& path);
WeightedGraph read_instance(std::istream& in, const std::string& source_name = "<stream>");

/// Writes the same format: `n m` header, one `u v w` line per edge,
/// 1-based endpoints, round-trip-exact weights, '\n' line endings.
void save_instance(const std::string& path, const WeightedGraph& g);
void write_instance(std::ostream& out, const WeightedGraph& g);

}  // namespace rescut
