#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "rescut/errors.hpp"
#include "rescut/graph.hpp"
#include "rescut/resistance.hpp"
#include "test_util.hpp"

using namespace rescut;

namespace {

double foster_sum(const WeightedGraph& g, const ResistanceProfile& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    sum += g.edges()[i].w * p.resistances[i];
  return sum;
}

}  // namespace

TEST_CASE("single edge is a lone resistor") {
  WeightedGraph g(2, {{0, 1, 4.0}});
  ResistanceProfile p = effective_resistances(g);
  CHECK(p.resistances[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(p.probabilities[0] == 1.0);
}

TEST_CASE("unit triangle: 1 ohm in parallel with a 2 ohm path") {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  ResistanceProfile p = effective_resistances(g);
  for (double r : p.resistances) CHECK(r == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  for (double prob : p.probabilities)
    CHECK(prob == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("a bridge edge has no alternate path") {
  // Two unit triangles joined by one weight-2 bridge.
  WeightedGraph g(6, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                      {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0},
                      {2, 3, 2.0}});
  ResistanceProfile p = effective_resistances(g);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edges()[i] == Edge{2, 3, 2.0})
      CHECK(p.resistances[i] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("requires at least one edge") {
  WeightedGraph lonely(3, {});
  CHECK_THROWS_AS(effective_resistances(lonely), ContractViolation);
}

TEST_CASE("Foster identity on random graphs, connected and not") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 10 + rng() % 191;
    const double density = 0.02 + 0.4 * (static_cast<double>(rng() % 1000) / 1000.0);
    WeightedGraph g = testutil::random_real_graph(rng, n, density);
    if (g.edge_count() == 0) continue;
    ResistanceProfile p = effective_resistances(g);
    const double expected =
        static_cast<double>(g.node_count()) - static_cast<double>(testutil::component_count(g));
    CHECK(foster_sum(g, p) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("Foster identity on a connected G(30, 0.3) equals n - 1") {
  std::mt19937_64 rng(555);
  WeightedGraph g = testutil::random_connected_graph(rng, 30, 0.3);
  REQUIRE(testutil::component_count(g) == 1);
  ResistanceProfile p = effective_resistances(g);
  CHECK(foster_sum(g, p) == doctest::Approx(29.0).epsilon(1e-9));
}

TEST_CASE("probabilities are a distribution and respect the parallel bound") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 20; ++round) {
    WeightedGraph g = testutil::random_real_graph(rng, 5 + rng() % 60, 0.3);
    if (g.edge_count() == 0) continue;
    ResistanceProfile p = effective_resistances(g);
    const double sum =
        std::accumulate(p.probabilities.begin(), p.probabilities.end(), 0.0);
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      CHECK(p.resistances[i] > 0.0);
      CHECK(p.resistances[i] <= 1.0 / g.edges()[i].w + 1e-9);
      CHECK(p.probabilities[i] ==
            p.resistances[i] / p.total_resistance);  // stored exactly as the quotient
    }
  }
}

TEST_CASE("adding an edge never raises an existing resistance") {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 10; ++round) {
    WeightedGraph g = testutil::random_connected_graph(rng, 12, 0.3);
    ResistanceProfile before = effective_resistances(g);

    // Add one absent pair.
    std::vector<Edge> edges = g.edges();
    bool added = false;
    for (NodeId u = 0; u < 12 && !added; ++u) {
      for (NodeId v = u + 1; v < 12 && !added; ++v) {
        bool present = false;
        for (const Edge& e : edges)
          if (e.u == u && e.v == v) present = true;
        if (!present) {
          edges.push_back({u, v, 1.0});
          added = true;
        }
      }
    }
    if (!added) continue;  // clique already
    WeightedGraph larger(12, edges);
    ResistanceProfile after = effective_resistances(larger);

    // Original edges keep their position under the canonical sort only if
    // we re-locate them; map by endpoints.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      for (std::size_t j = 0; j < larger.edge_count(); ++j)
        if (larger.edges()[j].u == e.u && larger.edges()[j].v == e.v)
          CHECK(after.resistances[j] <= before.resistances[i] + 1e-9);
    }
  }
}

TEST_CASE("scaling all weights by c divides resistances by c, probabilities unchanged") {
  std::mt19937_64 rng(2024);
  WeightedGraph g = testutil::random_connected_graph(rng, 15, 0.4, 7);
  const double c = 4.0;
  std::vector<Edge> scaled = g.edges();
  for (Edge& e : scaled) e.w *= c;
  WeightedGraph gc(15, scaled);

  ResistanceProfile p = effective_resistances(g);
  ResistanceProfile pc = effective_resistances(gc);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    CHECK(pc.resistances[i] * c == doctest::Approx(p.resistances[i]).epsilon(1e-12));
    CHECK(pc.probabilities[i] == doctest::Approx(p.probabilities[i]).epsilon(1e-12));
  }
}

TEST_CASE("weight-resistance rule reweights the distribution") {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 3.0}, {0, 2, 1.0}});
  ResistanceProfile plain = effective_resistances(g, SamplingRule::Resistance);
  ResistanceProfile weighted = effective_resistances(g, SamplingRule::WeightResistance);

  const double plain_sum =
      std::accumulate(plain.probabilities.begin(), plain.probabilities.end(), 0.0);
  const double weighted_sum =
      std::accumulate(weighted.probabilities.begin(), weighted.probabilities.end(), 0.0);
  CHECK(std::fabs(plain_sum - 1.0) <= 1e-12);
  CHECK(std::fabs(weighted_sum - 1.0) <= 1e-12);
  CHECK(plain.resistances == weighted.resistances);
  CHECK(plain.probabilities != weighted.probabilities);

  // w * R is constant across a graph iff Foster's shares are equal; here
  // the heavy edge must gain probability relative to the plain rule.
  std::size_t heavy = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edges()[i].w == 3.0) heavy = i;
  CHECK(weighted.probabilities[heavy] > plain.probabilities[heavy]);
}

TEST_CASE("disconnected graphs resolve per component") {
  // Two disjoint unit edges: each is a bridge in its own component.
  WeightedGraph g(4, {{0, 1, 2.0}, {2, 3, 5.0}});
  ResistanceProfile p = effective_resistances(g);
  CHECK(p.resistances[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(p.resistances[1] == doctest::Approx(0.2).epsilon(1e-9));
}
