#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rescut/graph.hpp"
#include "rescut/resistance.hpp"
#include "rescut/solve.hpp"
#include "rescut/sparsify.hpp"

namespace rescut {

enum class SolverKind { Exact, Tabu, Remote };

struct SolverChoice {
  SolverKind kind = SolverKind::Tabu;
  /// Tabu budgets; Remote sends tabu.max_iters as the request budget.
  TabuParams tabu;
  /// Remote only, "host:port".
  std::string server_address;
};

/// Aggregated metrics for one pipeline configuration. `mean_objective`
/// is the mean cut value of the solved assignments evaluated on the
/// ORIGINAL graph; `ratio` is mean_objective / reference_value, which
/// equals the mean of the per-trial ratios because the reference is a
/// single per-dataset value.
struct ExperimentReport {
  std::string dataset;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t q = 0;
  double mean_sparse_edges = 0.0;
  double reduction = 0.0;  ///< 1 - mean_sparse_edges / m
  double reference_value = 0.0;
  bool reference_exact = false;  ///< exact optimum vs best-of-heuristic
  double mean_objective = 0.0;
  double ratio = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double resistance_secs = 0.0;
  double sample_secs = 0.0;
  double solve_secs = 0.0;
};

/// Full pipeline: resistance profile once, then per trial i
/// (seed = cfg.seed + i) sparsify, compile, solve and evaluate the
/// returned assignment on the original graph. The reference value is
/// the exact optimum of the original graph when it fits under the exact
/// cap, otherwise the chosen solver's result on the original under the
/// same budget (seeded with cfg.seed). Trial failures are rethrown with
/// the trial index attached.
ExperimentReport run_pipeline(const WeightedGraph& g, const std::string& dataset,
                              const SparsifyConfig& cfg, const SolverChoice& solver,
                              std::size_t trials = 10,
                              SamplingRule rule = SamplingRule::Resistance);

/// One report per q value; q_values must be nonempty and ascending.
std::vector<ExperimentReport> sweep_q(const WeightedGraph& g, const std::string& dataset,
                                      const std::vector<std::size_t>& q_values,
                                      SparsifyConfig cfg, const SolverChoice& solver,
                                      std::size_t trials = 10,
                                      SamplingRule rule = SamplingRule::Resistance);

inline constexpr std::string_view kReportCsvHeader =
    "dataset,n,m,q,mean_sparse_edges,reduction,reference,mean_objective,ratio,"
    "trials,seed,resistance_secs,sample_secs,solve_secs";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentReport& report);

}  // namespace rescut
