#include "rescut/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>
#include <utility>

#include "rescut/errors.hpp"
#include "rescut/text.hpp"

namespace rescut {

QuboInstance::QuboInstance(std::size_t dimension, std::vector<QuboTriplet> triplets)
    : dimension_(dimension), triplets_(std::move(triplets)) {
  if (dimension_ == 0) throw ContractViolation("QUBO dimension must be positive");
  for (QuboTriplet& t : triplets_)
    if (t.u > t.v) std::swap(t.u, t.v);
  std::stable_sort(triplets_.begin(), triplets_.end(),
                   [](const QuboTriplet& a, const QuboTriplet& b) {
                     return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                   });
  for (std::size_t i = 0; i < triplets_.size(); ++i) {
    const QuboTriplet& t = triplets_[i];
    if (t.v >= dimension_)
      throw ContractViolation("triplet index " + std::to_string(t.v) +
                              " out of range for dimension " + std::to_string(dimension_));
    if (!std::isfinite(t.value) || t.value == 0.0)
      throw ContractViolation("triplet (" + std::to_string(t.u) + "," + std::to_string(t.v) +
                              ") must carry a finite nonzero value");
    if (i > 0 && triplets_[i - 1].u == t.u && triplets_[i - 1].v == t.v)
      throw ContractViolation("duplicate triplet (" + std::to_string(t.u) + "," +
                              std::to_string(t.v) + ")");
  }
}

std::size_t QuboInstance::offdiagonal_count() const {
  std::size_t count = 0;
  for (const QuboTriplet& t : triplets_)
    if (t.u != t.v) ++count;
  return count;
}

QuboInstance compile_qubo(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> degree(n, 0.0);
  for (const Edge& e : g.edges()) {
    degree[e.u] += e.w;
    degree[e.v] += e.w;
  }

  std::vector<QuboTriplet> triplets;
  triplets.reserve(g.edge_count() + n);
  std::size_t ei = 0;
  const auto& edges = g.edges();
  for (NodeId u = 0; u < n; ++u) {
    if (degree[u] > 0.0)
      triplets.push_back(QuboTriplet{u, u, degree[u]});
    while (ei < edges.size() && edges[ei].u == u) {
      triplets.push_back(QuboTriplet{u, edges[ei].v, -edges[ei].w});
      ++ei;
    }
  }
  return QuboInstance(n, std::move(triplets));
}

double qubo_objective(const QuboInstance& q, const CutAssignment& x) {
  if (x.size() != q.dimension())
    throw ContractViolation("assignment length " + std::to_string(x.size()) +
                            " does not match QUBO dimension " + std::to_string(q.dimension()));
  double total = 0.0;
  for (const QuboTriplet& t : q.triplets()) {
    if (t.u == t.v) {
      if (x.side(t.u)) total += t.value;
    } else if (x.side(t.u) && x.side(t.v)) {
      total += 2.0 * t.value;  // both ordered orientations of the pair
    }
  }
  return total;
}

std::size_t communication_cost(const QuboInstance& q) {
  return q.triplets().size();
}

std::string format_triplet(const QuboTriplet& t) {
  return std::to_string(t.u) + " " + std::to_string(t.v) + " " + text::format_double(t.value);
}

QuboTriplet parse_triplet(std::string_view line, const std::string& source,
                          std::size_t line_number) {
  auto tok = text::split_ws(line);
  std::uint64_t u = 0, v = 0;
  double value = 0.0;
  if (tok.size() != 3 || !text::parse_u64(tok[0], u) || !text::parse_u64(tok[1], v) ||
      !text::parse_double(tok[2], value))
    throw ParseError(source, line_number, "triplet line must be 'u v value'");
  return QuboTriplet{static_cast<NodeId>(u), static_cast<NodeId>(v), value};
}

void write_triplets(std::ostream& out, const QuboInstance& q) {
  for (const QuboTriplet& t : q.triplets())
    out << format_triplet(t) << '\n';
}

QuboInstance read_triplets(std::istream& in, std::size_t dimension,
                           const std::string& source_name) {
  std::vector<QuboTriplet> triplets;
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos || line[i] == '#') continue;
    QuboTriplet t = parse_triplet(line, source_name, line_no);
    max_index = std::max<std::uint64_t>(max_index, std::max(t.u, t.v));
    triplets.push_back(t);
  }
  if (dimension == 0) {
    if (triplets.empty())
      throw ParseError(source_name, line_no, "cannot infer dimension from an empty triplet list");
    dimension = static_cast<std::size_t>(max_index) + 1;
  }
  return QuboInstance(dimension, std::move(triplets));
}

QuboInstance load_qubo(const std::string& path, std::size_t dimension) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_triplets(in, dimension, path);
}

}  // namespace rescut
