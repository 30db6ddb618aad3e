#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rescut {

using NodeId = std::uint32_t;

/// One undirected edge; canonical form has u < v and w > 0.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected graph. Edge storage is canonical: sorted by
/// (u, v) with u < v, one entry per node pair, strictly positive
/// weights. Immutable after construction and safe to share across
/// threads.
class WeightedGraph {
 public:
  /// Endpoints may arrive in either order; everything else must already
  /// satisfy the invariants. Throws ContractViolation otherwise.
  WeightedGraph(std::size_t node_count, std::vector<Edge> edges);

  /// Builds a graph from untrusted edges: weights are replaced by their
  /// absolute values, zero-weight edges are dropped, self-loops are
  /// dropped with a warning on stderr, duplicate pairs are merged by
  /// summing.
  static WeightedGraph from_raw_edges(std::size_t node_count, std::vector<Edge> raw);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  double total_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
};

/// Two-sided node partition: bit u == 1 puts node u in the cut set.
class CutAssignment {
 public:
  /// Bits must be 0 or 1.
  explicit CutAssignment(std::vector<std::uint8_t> bits);

  static CutAssignment zeros(std::size_t n);
  /// Parses a string of '0'/'1' characters.
  static CutAssignment from_string(std::string_view s);

  std::size_t size() const { return bits_.size(); }
  bool side(std::size_t u) const { return bits_[u] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  CutAssignment complement() const;
  std::string to_string() const;

  friend bool operator==(const CutAssignment&, const CutAssignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Total weight of edges whose endpoints fall on opposite sides. The
/// assignment length must match the graph's node count.
double cut_weight(const WeightedGraph& g, const CutAssignment& s);

}  // namespace rescut
