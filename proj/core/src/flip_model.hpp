#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rescut/qubo.hpp"

namespace rescut::detail {

// Linear-plus-pairwise view of a QUBO with off-diagonal coefficients
// pre-doubled (both ordered orientations folded in), so single-bit flip
// gains are cheap to compute and maintain.
//
//   f(x) = sum_u linear[u] x_u + sum_{u<v} coeff_uv x_u x_v
//   gain(v) = (1 - 2 x_v) * (linear[v] + sum_{(u,c) in pair[v]} c x_u)
struct FlipModel {
  std::size_t n = 0;
  std::vector<double> linear;
  std::vector<std::vector<std::pair<NodeId, double>>> pair;

  explicit FlipModel(const QuboInstance& q) : n(q.dimension()), linear(n, 0.0), pair(n) {
    for (const QuboTriplet& t : q.triplets()) {
      if (t.u == t.v) {
        linear[t.u] = t.value;
      } else {
        const double c = 2.0 * t.value;
        pair[t.u].emplace_back(t.v, c);
        pair[t.v].emplace_back(t.u, c);
      }
    }
  }

  double objective(const std::vector<std::uint8_t>& x) const {
    double f = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!x[u]) continue;
      f += linear[u];
      for (const auto& [v, c] : pair[u])
        if (v > u && x[v]) f += c;
    }
    return f;
  }

  double gain(const std::vector<std::uint8_t>& x, std::size_t v) const {
    double inner = linear[v];
    for (const auto& [u, c] : pair[v])
      if (x[u]) inner += c;
    return x[v] ? -inner : inner;
  }

  void fill_gains(const std::vector<std::uint8_t>& x, std::vector<double>& gains) const {
    gains.resize(n);
    for (std::size_t v = 0; v < n; ++v) gains[v] = gain(x, v);
  }

  // Flips v in place and patches the gain array in O(degree of v).
  void apply_flip(std::vector<std::uint8_t>& x, std::vector<double>& gains,
                  std::size_t v) const {
    const double dv = x[v] ? -1.0 : 1.0;  // (1 - 2 x_v) before the flip
    for (const auto& [u, c] : pair[v]) {
      const double du = x[u] ? -1.0 : 1.0;
      gains[u] += du * c * dv;
    }
    gains[v] = -gains[v];
    x[v] ^= 1;
  }
};

}  // namespace rescut::detail
