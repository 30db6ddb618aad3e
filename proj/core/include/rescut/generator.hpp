#pragma once

#include <cstdint>

#include "rescut/graph.hpp"

namespace rescut {

enum class InstanceKind {
  G05,       ///< unit weights, each pair kept with probability `density`
  Weighted,  ///< like G05 plus integer weights drawn uniformly from [1, weight_range]
};

/// Synthetic Erdos-Renyi style instance. Deterministic for a fixed
/// seed: node pairs are visited in (u, v) order and consume the
/// generator in that order. weight_range is ignored for G05.
WeightedGraph generate_instance(InstanceKind kind, std::size_t n, double density,
                                int weight_range, std::uint64_t seed);

}  // namespace rescut
