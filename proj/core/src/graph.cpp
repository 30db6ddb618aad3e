#include "rescut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <tuple>
#include <utility>

#include "rescut/errors.hpp"

namespace rescut {
namespace {

void canonicalize(Edge& e) {
  if (e.u > e.v) std::swap(e.u, e.v);
}

bool edge_order(const Edge& a, const Edge& b) {
  return std::tie(a.u, a.v) < std::tie(b.u, b.v);
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ == 0) throw ContractViolation("graph needs at least one node");
  for (Edge& e : edges_) canonicalize(e);
  std::sort(edges_.begin(), edges_.end(), edge_order);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.v >= node_count_)
      throw ContractViolation("edge endpoint " + std::to_string(e.v) +
                              " out of range for " + std::to_string(node_count_) + " nodes");
    if (e.u == e.v)
      throw ContractViolation("self-loop at node " + std::to_string(e.u));
    if (!std::isfinite(e.w) || e.w <= 0.0)
      throw ContractViolation("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") has non-positive weight");
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
      throw ContractViolation("duplicate edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")");
  }
}

WeightedGraph WeightedGraph::from_raw_edges(std::size_t node_count, std::vector<Edge> raw) {
  std::vector<Edge> kept;
  kept.reserve(raw.size());
  std::size_t self_loops = 0;
  for (Edge e : raw) {
    canonicalize(e);
    e.w = std::fabs(e.w);
    if (e.u == e.v) {
      ++self_loops;
      continue;
    }
    if (e.w == 0.0) continue;
    kept.push_back(e);
  }
  if (self_loops > 0)
    std::cerr << "warning: dropped " << self_loops << " self-loop(s)\n";

  std::sort(kept.begin(), kept.end(), edge_order);
  std::vector<Edge> merged;
  merged.reserve(kept.size());
  for (const Edge& e : kept) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v)
      merged.back().w += e.w;
    else
      merged.push_back(e);
  }
  return WeightedGraph(node_count, std::move(merged));
}

double WeightedGraph::total_weight() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double acc, const Edge& e) { return acc + e.w; });
}

CutAssignment::CutAssignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_)
    if (b > 1) throw ContractViolation("assignment bits must be 0 or 1");
}

CutAssignment CutAssignment::zeros(std::size_t n) {
  return CutAssignment(std::vector<std::uint8_t>(n, 0));
}

CutAssignment CutAssignment::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw ContractViolation("assignment string must contain only '0'/'1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CutAssignment(std::move(bits));
}

CutAssignment CutAssignment::complement() const {
  std::vector<std::uint8_t> flipped(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    flipped[i] = static_cast<std::uint8_t>(1 - bits_[i]);
  return CutAssignment(std::move(flipped));
}

std::string CutAssignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

double cut_weight(const WeightedGraph& g, const CutAssignment& s) {
  if (s.size() != g.node_count())
    throw ContractViolation("assignment length " + std::to_string(s.size()) +
                            " does not match node count " + std::to_string(g.node_count()));
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (s.side(e.u) != s.side(e.v)) total += e.w;
  return total;
}

}  // namespace rescut
