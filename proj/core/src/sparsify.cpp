#include "rescut/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rescut/errors.hpp"

namespace rescut {

std::size_t resolve_q(QRule rule, const WeightedGraph& g, double epsilon,
                      std::size_t explicit_q) {
  switch (rule) {
    case QRule::Explicit:
      if (explicit_q == 0) throw ConfigError("explicit q must be >= 1");
      return explicit_q;
    case QRule::FiveN:
      return 5 * g.node_count();
    case QRule::Theorem1: {
      if (!(epsilon > 0.0)) throw ConfigError("theorem1 rule needs epsilon > 0");
      const double n = static_cast<double>(g.node_count());
      const double q = std::ceil(9.0 * n * std::log(n) / (epsilon * epsilon));
      return std::max<std::size_t>(1, static_cast<std::size_t>(q));
    }
  }
  throw ConfigError("unknown q rule");
}

std::size_t resolve_q(const SparsifyConfig& cfg, const WeightedGraph& g) {
  return resolve_q(cfg.q_rule, g, cfg.epsilon, cfg.q);
}

WeightedGraph sparsify(const WeightedGraph& g, const ResistanceProfile& profile,
                       const SparsifyConfig& cfg) {
  const std::size_t m = g.edge_count();
  if (profile.probabilities.size() != m || profile.resistances.size() != m)
    throw ContractViolation("resistance profile does not match the graph's edge list");
  const std::size_t q = resolve_q(cfg, g);

  // Cumulative distribution; draws are resolved by binary search so the
  // sampling is exact with respect to the stored probabilities.
  std::vector<double> cumulative(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    acc += profile.probabilities[i];
    cumulative[i] = acc;
  }
  const double total = cumulative.back();

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uniform(0.0, total);
  std::vector<std::uint64_t> hits(m, 0);
  for (std::size_t draw = 0; draw < q; ++draw) {
    const double x = uniform(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= m) idx = m - 1;
    ++hits[idx];
  }

  std::vector<Edge> sampled;
  for (std::size_t i = 0; i < m; ++i) {
    if (hits[i] == 0) continue;
    // hits/(q*p) first: when p == 1 the ratio is exactly 1 and the
    // original weight survives bit-for-bit.
    const double scale = static_cast<double>(hits[i]) /
                         (static_cast<double>(q) * profile.probabilities[i]);
    sampled.push_back(Edge{g.edges()[i].u, g.edges()[i].v, scale * g.edges()[i].w});
  }
  return WeightedGraph(g.node_count(), std::move(sampled));
}

}  // namespace rescut
