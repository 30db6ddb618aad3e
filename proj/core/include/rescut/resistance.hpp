#pragma once

#include <vector>

#include "rescut/graph.hpp"

namespace rescut {

/// How sampling probabilities are derived from effective resistances.
enum class SamplingRule {
  Resistance,        ///< p_e proportional to R_e (default)
  WeightResistance,  ///< p_e proportional to w_e * R_e, for comparison runs
};

/// Per-edge effective resistances and the sampling distribution derived
/// from them. Entries follow the graph's edge order; probabilities sum
/// to one.
struct ResistanceProfile {
  std::vector<double> resistances;
  std::vector<double> probabilities;
  double total_resistance = 0.0;
};

/// Treats the graph as a resistor network where edge e has resistance
/// 1/w_e and computes R_e between the endpoints of every edge from one
/// dense Laplacian pseudoinverse. Eigenvalues at or below 1e-10 times
/// the largest are treated as zero, which resolves each connected
/// component independently. O(|V|^3 + |E|); requires at least one edge.
ResistanceProfile effective_resistances(const WeightedGraph& g,
                                        SamplingRule rule = SamplingRule::Resistance);

}  // namespace rescut
