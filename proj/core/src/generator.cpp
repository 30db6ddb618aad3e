#include "rescut/generator.hpp"

#include <random>

#include "rescut/errors.hpp"

namespace rescut {

WeightedGraph generate_instance(InstanceKind kind, std::size_t n, double density,
                                int weight_range, std::uint64_t seed) {
  if (n < 2) throw ConfigError("generator needs n >= 2");
  if (!(density > 0.0) || density > 1.0) throw ConfigError("density must be in (0, 1]");
  if (kind == InstanceKind::Weighted && weight_range < 1)
    throw ConfigError("weight_range must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, weight_range);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(static_cast<double>(n) * (n - 1) / 2 * density) + 16);
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng) >= density) continue;
      double w = kind == InstanceKind::Weighted ? static_cast<double>(weight(rng)) : 1.0;
      edges.push_back(Edge{u, v, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace rescut
