#include <random>
#include <sstream>

#include "doctest.h"
#include "rescut/errors.hpp"
#include "rescut/experiment.hpp"
#include "rescut/generator.hpp"
#include "test_util.hpp"

using namespace rescut;

namespace {

SolverChoice exact_choice() {
  SolverChoice c;
  c.kind = SolverKind::Exact;
  return c;
}

bool rows_equal_ignoring_elapsed(const ExperimentReport& a, const ExperimentReport& b) {
  return a.dataset == b.dataset && a.n == b.n && a.m == b.m && a.q == b.q &&
         a.mean_sparse_edges == b.mean_sparse_edges && a.reduction == b.reduction &&
         a.reference_value == b.reference_value && a.mean_objective == b.mean_objective &&
         a.ratio == b.ratio && a.trials == b.trials && a.seed == b.seed;
}

}  // namespace

TEST_CASE("saturated sampling on the triangle recovers the optimum") {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  SparsifyConfig cfg{QRule::Explicit, 30, 0.1, 5};
  ExperimentReport r = run_pipeline(g, "triangle", cfg, exact_choice(), 10);
  CHECK(r.reference_exact);
  CHECK(r.reference_value == 2.0);
  CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.q == 30);
  CHECK(r.mean_objective == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("exact pipeline on G(20, 0.5): bounded by the optimum, ratio healthy") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 20, 0.5, 1, 11);
  SparsifyConfig cfg{QRule::Explicit, 100, 0.1, 100};
  ExperimentReport r = run_pipeline(g, "g20", cfg, exact_choice(), 10);
  CHECK(r.reference_exact);
  CHECK(r.ratio >= 0.8);
  CHECK(r.ratio <= 1.0 + 1e-12);
  CHECK(r.reduction > 0.0);
  CHECK(r.reduction < 1.0);
}

TEST_CASE("near-saturated sampling recovers the graph") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 16, 0.5, 1, 1);
  SparsifyConfig cfg;
  cfg.q_rule = QRule::Explicit;
  cfg.q = g.edge_count() * 10;
  cfg.seed = 3;
  ExperimentReport r = run_pipeline(g, "g16", cfg, exact_choice(), 10);
  CHECK(r.ratio >= 0.99);  // 0.9978 on this instance
}

TEST_CASE("a single-entry sweep equals run_pipeline") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 18, 0.5, 1, 8);
  SparsifyConfig cfg{QRule::Explicit, 60, 0.1, 42};
  ExperimentReport direct = run_pipeline(g, "g18", cfg, exact_choice(), 5);
  std::vector<ExperimentReport> swept = sweep_q(g, "g18", {60}, cfg, exact_choice(), 5);
  REQUIRE(swept.size() == 1);
  CHECK(rows_equal_ignoring_elapsed(direct, swept[0]));
}

TEST_CASE("sweep validates its q list") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 10, 0.5, 1, 8);
  SparsifyConfig cfg;
  CHECK_THROWS_AS(sweep_q(g, "g", {}, cfg, exact_choice(), 2), ConfigError);
  CHECK_THROWS_AS(sweep_q(g, "g", {50, 50}, cfg, exact_choice(), 2), ConfigError);
  CHECK_THROWS_AS(sweep_q(g, "g", {50, 40}, cfg, exact_choice(), 2), ConfigError);
}

TEST_CASE("trial failures carry the trial index") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 30, 0.5, 1, 8);  // above exact cap
  SparsifyConfig cfg{QRule::Explicit, 50, 0.1, 1};
  try {
    run_pipeline(g, "g30", cfg, exact_choice(), 3);
    FAIL("expected failure: exact reference above the cap");
  } catch (const SizeLimitError&) {
    // reference solve fails before any trial; fine
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("trial") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic apart from elapsed times") {
  WeightedGraph g = generate_instance(InstanceKind::G05, 40, 0.4, 1, 77);
  SparsifyConfig cfg{QRule::FiveN, 0, 0.1, 31};
  SolverChoice tabu;
  tabu.kind = SolverKind::Tabu;
  tabu.tabu.max_iters = 3000;
  ExperimentReport a = run_pipeline(g, "g40", cfg, tabu, 6);
  ExperimentReport b = run_pipeline(g, "g40", cfg, tabu, 6);
  CHECK(rows_equal_ignoring_elapsed(a, b));
  CHECK(!a.reference_exact);  // 40 nodes is above the exact cap
  CHECK(a.q == 200);
}

TEST_CASE("csv header and row layout") {
  WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  SparsifyConfig cfg{QRule::Explicit, 10, 0.1, 5};
  ExperimentReport r = run_pipeline(g, "triangle", cfg, exact_choice(), 2);

  std::ostringstream out;
  write_csv_header(out);
  write_csv_row(out, r);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header ==
        "dataset,n,m,q,mean_sparse_edges,reduction,reference,mean_objective,ratio,"
        "trials,seed,resistance_secs,sample_secs,solve_secs");
  CHECK(row.rfind("triangle,3,3,10,", 0) == 0);
  std::size_t commas = 0;
  for (char ch : row) commas += ch == ',';
  CHECK(commas == 13);
}
