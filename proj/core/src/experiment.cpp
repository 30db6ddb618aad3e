#include "rescut/experiment.hpp"

#include <chrono>
#include <ostream>

#include "rescut/client.hpp"
#include "rescut/errors.hpp"
#include "rescut/qubo.hpp"
#include "rescut/text.hpp"

namespace rescut {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SolveResult solve_with(const SolverChoice& choice, const QuboInstance& instance,
                       std::uint64_t seed) {
  switch (choice.kind) {
    case SolverKind::Exact:
      return solve_exact(instance);
    case SolverKind::Tabu:
      return solve_tabu(instance, choice.tabu, seed);
    case SolverKind::Remote: {
      const auto t0 = Clock::now();
      TransferReport transfer =
          submit(choice.server_address, instance, choice.tabu.max_iters);
      SolveResult result;
      result.assignment = std::move(transfer.assignment);
      result.objective = transfer.server_objective;
      result.solver_name = "remote";
      result.exact = false;
      result.elapsed_secs = seconds_since(t0);
      return result;
    }
  }
  throw ConfigError("unknown solver kind");
}

}  // namespace

ExperimentReport run_pipeline(const WeightedGraph& g, const std::string& dataset,
                              const SparsifyConfig& cfg, const SolverChoice& solver,
                              std::size_t trials, SamplingRule rule) {
  if (trials < 1) throw ConfigError("trials must be >= 1");

  ExperimentReport report;
  report.dataset = dataset;
  report.n = g.node_count();
  report.m = g.edge_count();
  report.q = resolve_q(cfg, g);
  report.trials = trials;
  report.seed = cfg.seed;

  auto t0 = Clock::now();
  const ResistanceProfile profile = effective_resistances(g, rule);
  report.resistance_secs = seconds_since(t0);

  // Reference on the original graph: certified optimum when the exact
  // sweep can afford it, otherwise the chosen solver under the same
  // budget. Solved assignments are always scored by cut_weight on the
  // original graph, and the compile/cut identity makes the reference
  // objective that same score.
  SolveResult reference;
  if (g.node_count() <= kExactDimensionCap) {
    reference = solve_exact(compile_qubo(g));
    report.reference_exact = true;
  } else {
    reference = solve_with(solver, compile_qubo(g), cfg.seed);
    report.reference_exact = reference.exact;
  }
  report.reference_value = cut_weight(g, reference.assignment);
  if (!(report.reference_value > 0.0) && g.edge_count() > 0)
    throw NumericError("reference solver returned a non-positive cut");

  double sum_edges = 0.0;
  double sum_objective = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    try {
      SparsifyConfig trial_cfg = cfg;
      trial_cfg.seed = cfg.seed + i;

      t0 = Clock::now();
      const WeightedGraph sparse = sparsify(g, profile, trial_cfg);
      report.sample_secs += seconds_since(t0);

      const QuboInstance instance = compile_qubo(sparse);
      if (instance.offdiagonal_count() != sparse.edge_count())
        throw NumericError("off-diagonal triplet count disagrees with the sampled edge count");

      t0 = Clock::now();
      const SolveResult solved = solve_with(solver, instance, cfg.seed + i);
      report.solve_secs += seconds_since(t0);

      const double objective_on_g = cut_weight(g, solved.assignment);
      if (report.reference_exact && objective_on_g > report.reference_value + 1e-9)
        throw NumericError("trial cut exceeds the certified optimum");

      sum_edges += static_cast<double>(sparse.edge_count());
      sum_objective += objective_on_g;
    } catch (const std::exception& e) {
      throw std::runtime_error("trial " + std::to_string(i) + ": " + e.what());
    }
  }

  report.mean_sparse_edges = sum_edges / static_cast<double>(trials);
  report.mean_objective = sum_objective / static_cast<double>(trials);
  report.reduction = 1.0 - report.mean_sparse_edges / static_cast<double>(report.m);
  report.ratio = report.mean_objective / report.reference_value;
  return report;
}

std::vector<ExperimentReport> sweep_q(const WeightedGraph& g, const std::string& dataset,
                                      const std::vector<std::size_t>& q_values,
                                      SparsifyConfig cfg, const SolverChoice& solver,
                                      std::size_t trials, SamplingRule rule) {
  if (q_values.empty()) throw ConfigError("q sweep needs at least one value");
  for (std::size_t i = 1; i < q_values.size(); ++i)
    if (q_values[i] <= q_values[i - 1])
      throw ConfigError("q sweep values must be strictly ascending");

  std::vector<ExperimentReport> reports;
  reports.reserve(q_values.size());
  cfg.q_rule = QRule::Explicit;
  for (std::size_t q : q_values) {
    cfg.q = q;
    reports.push_back(run_pipeline(g, dataset, cfg, solver, trials, rule));
  }
  return reports;
}

void write_csv_header(std::ostream& out) {
  out << kReportCsvHeader << '\n';
}

void write_csv_row(std::ostream& out, const ExperimentReport& r) {
  out << r.dataset << ',' << r.n << ',' << r.m << ',' << r.q << ','
      << text::format_double(r.mean_sparse_edges) << ','
      << text::format_double(r.reduction) << ','
      << text::format_double(r.reference_value) << ','
      << text::format_double(r.mean_objective) << ','
      << text::format_double(r.ratio) << ','
      << r.trials << ',' << r.seed << ','
      << text::format_double(r.resistance_secs) << ','
      << text::format_double(r.sample_secs) << ','
      << text::format_double(r.solve_secs) << '\n';
}

}  // namespace rescut
