#pragma once

#include <cstdint>

#include "rescut/graph.hpp"
#include "rescut/resistance.hpp"

namespace rescut {

/// How the draw count q is chosen.
enum class QRule {
  Explicit,  ///< take SparsifyConfig::q as given
  Theorem1,  ///< ceil(9 n ln(n) / epsilon^2)
  FiveN,     ///< 5 n
};

/// Everything controlling one sampling run.
struct SparsifyConfig {
  QRule q_rule = QRule::Explicit;
  std::size_t q = 0;      ///< draw count, Explicit rule only
  double epsilon = 0.1;   ///< Theorem1 rule only
  std::uint64_t seed = 1;
};

/// Resolves the draw count; at least 1. Theorem1 uses the natural
/// logarithm and rounds up. Throws ConfigError on epsilon <= 0 or an
/// Explicit q of 0.
std::size_t resolve_q(QRule rule, const WeightedGraph& g, double epsilon,
                      std::size_t explicit_q);
std::size_t resolve_q(const SparsifyConfig& cfg, const WeightedGraph& g);

/// Draws q edges i.i.d. from the profile's distribution and accumulates
/// w(e) / (q * p_e) onto each hit. Edges never drawn are absent, so the
/// result has the same node count and at most min(q, |E|) edges.
/// Deterministic for a fixed (graph, profile, config).
WeightedGraph sparsify(const WeightedGraph& g, const ResistanceProfile& profile,
                       const SparsifyConfig& cfg);

}  // namespace rescut
