#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rescut/graph.hpp"

namespace rescut {

/// One nonzero entry of the symmetric QUBO matrix, stored once per
/// unordered pair with u <= v.
struct QuboTriplet {
  NodeId u = 0;
  NodeId v = 0;
  double value = 0.0;

  friend bool operator==(const QuboTriplet&, const QuboTriplet&) = default;
};

/// Sparse QUBO in triplet form, sorted by (u, v), one triplet per
/// unordered index pair, all values nonzero. Immutable after
/// construction.
class QuboInstance {
 public:
  QuboInstance(std::size_t dimension, std::vector<QuboTriplet> triplets);

  std::size_t dimension() const { return dimension_; }
  const std::vector<QuboTriplet>& triplets() const { return triplets_; }
  std::size_t offdiagonal_count() const;

  friend bool operator==(const QuboInstance&, const QuboInstance&) = default;

 private:
  std::size_t dimension_;
  std::vector<QuboTriplet> triplets_;
};

/// Maxcut compilation: Q_uu = weighted degree of u, Q_uv = -w({u,v}).
/// The objective of the result equals cut_weight on every assignment.
/// Nonzero count is |E| plus the number of non-isolated nodes.
QuboInstance compile_qubo(const WeightedGraph& g);

/// Evaluates the quadratic form over a binary vector. Diagonal entries
/// count once; each stored off-diagonal entry stands for both ordered
/// orientations of the symmetric matrix and therefore counts twice.
double qubo_objective(const QuboInstance& q, const CutAssignment& x);

/// Number of (u, v, value) records a solver submission transmits.
std::size_t communication_cost(const QuboInstance& q);

/// Triplet text form shared with the wire protocol: `u v value`,
/// 0-indexed, value in shortest round-trip decimal.
std::string format_triplet(const QuboTriplet& t);
/// Parses one triplet line; `source` and `line` feed the error message.
QuboTriplet parse_triplet(std::string_view line, const std::string& source,
                          std::size_t line_number);

void write_triplets(std::ostream& out, const QuboInstance& q);

/// Reads `u v value` lines (blank lines and '#' comments skipped). A
/// dimension of 0 means "infer as max index + 1".
QuboInstance read_triplets(std::istream& in, std::size_t dimension = 0,
                           const std::string& source_name = "<stream>");
QuboInstance load_qubo(const std::string& path, std::size_t dimension = 0);

}  // namespace rescut
