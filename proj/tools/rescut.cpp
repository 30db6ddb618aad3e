// Command-line frontend for the sparsify-then-solve maxcut pipeline.
//
// Subcommands: generate, resistances, sparsify, solve, serve, experiment.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rescut/client.hpp"
#include "rescut/errors.hpp"
#include "rescut/experiment.hpp"
#include "rescut/generator.hpp"
#include "rescut/instance_io.hpp"
#include "rescut/qubo.hpp"
#include "rescut/resistance.hpp"
#include "rescut/server.hpp"
#include "rescut/solve.hpp"
#include "rescut/sparsify.hpp"
#include "rescut/text.hpp"

namespace {

using namespace rescut;

struct GenSpec {
  InstanceKind kind = InstanceKind::G05;
  std::size_t n = 0;
  double density = 0.0;
  int weight_range = 100;
};

GenSpec parse_gen_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4)
    throw ConfigError("--gen expects KIND,N,DENSITY[,RANGE]");

  GenSpec g;
  if (parts[0] == "g05")
    g.kind = InstanceKind::G05;
  else if (parts[0] == "weighted")
    g.kind = InstanceKind::Weighted;
  else
    throw ConfigError("--gen kind must be 'g05' or 'weighted'");

  std::uint64_t n = 0;
  if (!text::parse_u64(parts[1], n)) throw ConfigError("--gen: bad node count");
  g.n = static_cast<std::size_t>(n);
  if (!text::parse_double(parts[2], g.density)) throw ConfigError("--gen: bad density");
  if (parts.size() == 4) {
    std::uint64_t r = 0;
    if (!text::parse_u64(parts[3], r)) throw ConfigError("--gen: bad weight range");
    g.weight_range = static_cast<int>(r);
  }
  return g;
}

std::string gen_label(const GenSpec& g, std::uint64_t seed) {
  std::string kind = g.kind == InstanceKind::G05 ? "g05" : "weighted";
  return kind + "-n" + std::to_string(g.n) + "-d" + text::format_double(g.density) + "-s" +
         std::to_string(seed);
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

QRule parse_q_rule(const std::string& rule) {
  if (rule == "explicit") return QRule::Explicit;
  if (rule == "five_n") return QRule::FiveN;
  if (rule == "theorem1") return QRule::Theorem1;
  throw ConfigError("unknown q rule '" + rule + "'");
}

SamplingRule parse_sampling_rule(const std::string& rule) {
  if (rule == "resistance") return SamplingRule::Resistance;
  if (rule == "weight-resistance") return SamplingRule::WeightResistance;
  throw ConfigError("unknown sampling rule '" + rule + "'");
}

std::vector<std::size_t> parse_q_list(const std::string& list) {
  std::vector<std::size_t> values;
  std::stringstream ss(list);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::uint64_t q = 0;
    if (!text::parse_u64(part, q) || q == 0) throw ConfigError("--q-list: bad value '" + part + "'");
    values.push_back(static_cast<std::size_t>(q));
  }
  return values;
}

// Writes to the path when given, otherwise to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_generate(const std::string& kind, std::size_t n, double density, int weight_range,
                 std::uint64_t seed, const std::string& out) {
  InstanceKind k = kind == "weighted" ? InstanceKind::Weighted : InstanceKind::G05;
  WeightedGraph g = generate_instance(k, n, density, weight_range, seed);
  OutputTarget target(out);
  write_instance(target.stream(), g);
  std::cerr << "generated " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
  return 0;
}

int cmd_resistances(const std::string& instance, const std::string& rule,
                    const std::string& csv) {
  WeightedGraph g = load_instance(instance);
  ResistanceProfile profile = effective_resistances(g, parse_sampling_rule(rule));
  OutputTarget target(csv);
  target.stream() << "u,v,w,R_e,p_e\n";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    target.stream() << e.u << ',' << e.v << ',' << text::format_double(e.w) << ','
                    << text::format_double(profile.resistances[i]) << ','
                    << text::format_double(profile.probabilities[i]) << '\n';
  }
  return 0;
}

int cmd_sparsify(const std::string& instance, const std::string& out,
                 const SparsifyConfig& cfg, const std::string& rule) {
  WeightedGraph g = load_instance(instance);
  ResistanceProfile profile = effective_resistances(g, parse_sampling_rule(rule));
  WeightedGraph sparse = sparsify(g, profile, cfg);
  save_instance(out, sparse);
  const double reduction =
      1.0 - static_cast<double>(sparse.edge_count()) / static_cast<double>(g.edge_count());
  std::cout << "edges,sparse_edges,reduction\n"
            << g.edge_count() << ',' << sparse.edge_count() << ','
            << text::format_double(reduction) << '\n';
  return 0;
}

int cmd_solve(const std::string& instance, const std::string& qubo_path,
              const std::string& solver, const TabuParams& tabu, std::uint64_t seed,
              const std::string& server) {
  std::unique_ptr<QuboInstance> qubo;
  if (!instance.empty()) {
    qubo = std::make_unique<QuboInstance>(compile_qubo(load_instance(instance)));
  } else if (!qubo_path.empty()) {
    qubo = std::make_unique<QuboInstance>(load_qubo(qubo_path));
  } else {
    throw ConfigError("solve needs --instance or --qubo");
  }

  SolveResult result;
  if (solver == "exact") {
    result = solve_exact(*qubo);
  } else if (solver == "tabu") {
    result = solve_tabu(*qubo, tabu, seed);
  } else if (solver == "remote") {
    if (server.empty()) throw ConfigError("remote solver needs --server");
    const auto t0 = std::chrono::steady_clock::now();
    TransferReport transfer = submit(server, *qubo, tabu.max_iters);
    result.assignment = transfer.assignment;
    result.objective = transfer.server_objective;
    result.solver_name = "remote";
    result.elapsed_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "request_bytes=" << transfer.request_bytes
              << " response_bytes=" << transfer.response_bytes
              << " triplets=" << transfer.triplet_count << '\n';
  } else {
    throw ConfigError("unknown solver '" + solver + "'");
  }

  std::cout << "solver,objective,elapsed_secs,assignment\n"
            << result.solver_name << ',' << text::format_double(result.objective) << ','
            << text::format_double(result.elapsed_secs) << ','
            << result.assignment.to_string() << '\n';
  return 0;
}

int cmd_serve(const std::string& listen, const std::string& solver, std::uint64_t seed,
              std::uint64_t default_budget, bool echo) {
  ServerConfig cfg;
  cfg.solver = solver == "exact" ? ServerSolver::Exact : ServerSolver::Tabu;
  cfg.seed = seed;
  cfg.default_budget_iters = default_budget;
  cfg.echo = echo;
  std::cerr << "serving on " << listen << " (solver=" << solver
            << (echo ? ", echo mode" : "") << ")\n";
  serve(listen, cfg);
  return 0;
}

int cmd_experiment(const std::string& instance, const std::string& gen,
                   std::uint64_t gen_seed, const SparsifyConfig& cfg,
                   const std::string& q_list, std::size_t trials,
                   const std::string& solver, const std::string& server,
                   const TabuParams& tabu, const std::string& csv,
                   const std::string& rule) {
  std::unique_ptr<WeightedGraph> graph;
  std::string dataset;
  if (!instance.empty()) {
    graph = std::make_unique<WeightedGraph>(load_instance(instance));
    dataset = file_stem(instance);
  } else if (!gen.empty()) {
    GenSpec spec = parse_gen_spec(gen);
    graph = std::make_unique<WeightedGraph>(
        generate_instance(spec.kind, spec.n, spec.density, spec.weight_range, gen_seed));
    dataset = gen_label(spec, gen_seed);
  } else {
    throw ConfigError("experiment needs --instance or --gen");
  }

  SolverChoice choice;
  choice.tabu = tabu;
  if (solver == "exact") {
    choice.kind = SolverKind::Exact;
  } else if (solver == "tabu") {
    choice.kind = SolverKind::Tabu;
  } else if (solver == "remote") {
    if (server.empty()) throw ConfigError("remote solver needs --server");
    choice.kind = SolverKind::Remote;
    choice.server_address = server;
  } else {
    throw ConfigError("unknown solver '" + solver + "'");
  }

  OutputTarget target(csv);
  write_csv_header(target.stream());
  std::vector<ExperimentReport> reports;
  if (!q_list.empty()) {
    reports = sweep_q(*graph, dataset, parse_q_list(q_list), cfg, choice, trials,
                      parse_sampling_rule(rule));
  } else {
    reports.push_back(
        run_pipeline(*graph, dataset, cfg, choice, trials, parse_sampling_rule(rule)));
  }
  for (const ExperimentReport& r : reports) {
    write_csv_row(target.stream(), r);
    std::cerr << "q=" << r.q << " reduction=" << text::format_double(r.reduction)
              << " ratio=" << text::format_double(r.ratio) << " reference="
              << text::format_double(r.reference_value)
              << (r.reference_exact ? " (exact)" : " (heuristic)") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective-resistance sparsification pipeline for maxcut QUBO solving"};
  app.require_subcommand(1);

  // generate
  std::string g_kind = "g05", g_out;
  std::size_t g_nodes = 100;
  double g_density = 0.5;
  int g_range = 100;
  std::uint64_t g_seed = 1;
  auto* generate = app.add_subcommand("generate", "Emit a synthetic maxcut instance");
  generate->add_option("--kind", g_kind, "g05 | weighted")
      ->check(CLI::IsMember({"g05", "weighted"}));
  generate->add_option("--nodes", g_nodes, "node count")->required();
  generate->add_option("--density", g_density, "edge probability in (0,1]")->required();
  generate->add_option("--weight-range", g_range, "max integer weight (weighted kind)");
  generate->add_option("--seed", g_seed, "generator seed");
  generate->add_option("--out", g_out, "output path (default stdout)");

  // resistances
  std::string r_instance, r_rule = "resistance", r_csv;
  auto* resistances =
      app.add_subcommand("resistances", "Dump per-edge effective resistances as CSV");
  resistances->add_option("--instance", r_instance, "instance file")->required();
  resistances->add_option("--rule", r_rule, "resistance | weight-resistance")
      ->check(CLI::IsMember({"resistance", "weight-resistance"}));
  resistances->add_option("--csv", r_csv, "output path (default stdout)");

  // sparsify
  std::string s_instance, s_out, s_qrule = "explicit", s_rule = "resistance";
  SparsifyConfig s_cfg;
  auto* sparsify_cmd =
      app.add_subcommand("sparsify", "Sample a sparsified instance and report the reduction");
  sparsify_cmd->add_option("--instance", s_instance, "instance file")->required();
  sparsify_cmd->add_option("--out", s_out, "output instance path")->required();
  sparsify_cmd->add_option("--q-rule", s_qrule, "explicit | five_n | theorem1")
      ->check(CLI::IsMember({"explicit", "five_n", "theorem1"}));
  sparsify_cmd->add_option("--q", s_cfg.q, "draw count for the explicit rule");
  sparsify_cmd->add_option("--epsilon", s_cfg.epsilon, "epsilon for the theorem1 rule");
  sparsify_cmd->add_option("--seed", s_cfg.seed, "sampling seed");
  sparsify_cmd->add_option("--rule", s_rule, "resistance | weight-resistance")
      ->check(CLI::IsMember({"resistance", "weight-resistance"}));

  // solve
  std::string so_instance, so_qubo, so_solver = "tabu", so_server;
  TabuParams so_tabu;
  std::uint64_t so_seed = 1;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print the assignment");
  solve->add_option("--instance", so_instance, "maxcut instance file");
  solve->add_option("--qubo", so_qubo, "raw triplet file");
  solve->add_option("--solver", so_solver, "exact | tabu | remote")
      ->check(CLI::IsMember({"exact", "tabu", "remote"}));
  solve->add_option("--budget-iters", so_tabu.max_iters, "iteration budget");
  solve->add_option("--budget-secs", so_tabu.max_seconds, "wall-clock budget");
  solve->add_option("--seed", so_seed, "tabu seed");
  solve->add_option("--server", so_server, "host:port for the remote solver");

  // serve
  std::string sv_listen = "127.0.0.1:7150", sv_solver = "tabu";
  std::uint64_t sv_seed = 1, sv_budget = 100000;
  bool sv_echo = false;
  auto* serve_cmd = app.add_subcommand("serve", "Run the mock cloud QUBO solver");
  serve_cmd->add_option("--listen", sv_listen, "host:port to bind");
  serve_cmd->add_option("--solver", sv_solver, "exact | tabu")
      ->check(CLI::IsMember({"exact", "tabu"}));
  serve_cmd->add_option("--seed", sv_seed, "solver seed");
  serve_cmd->add_option("--default-budget-iters", sv_budget,
                        "iteration budget for requests that send 0");
  serve_cmd->add_flag("--echo", sv_echo, "echo parsed instances instead of solving");

  // experiment
  std::string e_instance, e_gen, e_qrule = "five_n", e_qlist, e_solver = "tabu", e_server,
              e_csv, e_rule = "resistance";
  std::uint64_t e_gen_seed = 1;
  SparsifyConfig e_cfg;
  TabuParams e_tabu;
  std::size_t e_trials = 10;
  auto* experiment =
      app.add_subcommand("experiment", "Run the full pipeline and emit metrics as CSV");
  experiment->add_option("--instance", e_instance, "instance file");
  experiment->add_option("--gen", e_gen, "KIND,N,DENSITY[,RANGE] synthetic instance");
  experiment->add_option("--gen-seed", e_gen_seed, "generator seed for --gen");
  experiment->add_option("--q-rule", e_qrule, "five_n | theorem1 | explicit")
      ->check(CLI::IsMember({"five_n", "theorem1", "explicit"}));
  experiment->add_option("--q", e_cfg.q, "draw count for the explicit rule");
  experiment->add_option("--q-list", e_qlist, "comma-separated ascending q sweep");
  experiment->add_option("--epsilon", e_cfg.epsilon, "epsilon for the theorem1 rule");
  experiment->add_option("--trials", e_trials, "trials per configuration");
  experiment->add_option("--seed", e_cfg.seed, "base seed; trial i uses seed+i");
  experiment->add_option("--solver", e_solver, "exact | tabu | remote")
      ->check(CLI::IsMember({"exact", "tabu", "remote"}));
  experiment->add_option("--server", e_server, "host:port for the remote solver");
  experiment->add_option("--budget-iters", e_tabu.max_iters, "solver iteration budget");
  experiment->add_option("--budget-secs", e_tabu.max_seconds, "solver wall-clock budget");
  experiment->add_option("--csv", e_csv, "CSV output path (default stdout)");
  experiment->add_option("--rule", e_rule, "resistance | weight-resistance")
      ->check(CLI::IsMember({"resistance", "weight-resistance"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return cmd_generate(g_kind, g_nodes, g_density, g_range, g_seed, g_out);
    if (resistances->parsed()) return cmd_resistances(r_instance, r_rule, r_csv);
    if (sparsify_cmd->parsed()) {
      s_cfg.q_rule = parse_q_rule(s_qrule);
      return cmd_sparsify(s_instance, s_out, s_cfg, s_rule);
    }
    if (solve->parsed())
      return cmd_solve(so_instance, so_qubo, so_solver, so_tabu, so_seed, so_server);
    if (serve_cmd->parsed())
      return cmd_serve(sv_listen, sv_solver, sv_seed, sv_budget, sv_echo);
    if (experiment->parsed()) {
      e_cfg.q_rule = parse_q_rule(e_qrule);
      return cmd_experiment(e_instance, e_gen, e_gen_seed, e_cfg, e_qlist, e_trials,
                            e_solver, e_server, e_tabu, e_csv, e_rule);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
