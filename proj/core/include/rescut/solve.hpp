#pragma once

#include <cstdint>
#include <string>

#include "rescut/graph.hpp"
#include "rescut/qubo.hpp"

namespace rescut {

/// Output of one solver invocation. `objective` is always the value of
/// qubo_objective on the returned assignment, recomputed on return.
struct SolveResult {
  CutAssignment assignment = CutAssignment::zeros(0);
  double objective = 0.0;
  std::string solver_name;
  double elapsed_secs = 0.0;
  bool exact = false;
};

inline constexpr std::size_t kExactDimensionCap = 26;

/// Exhaustive maximization. Node 0 is fixed to side 0 (cut symmetry
/// halves the sweep) and ties go to the first maximizer in ascending
/// binary order over the remaining bits. Refuses dimensions above
/// kExactDimensionCap with SizeLimitError.
SolveResult solve_exact(const QuboInstance& q);

/// Budget and knobs for the tabu heuristic. max_iters == 0 with a
/// positive max_seconds runs on wall clock alone; wall-clock runs are
/// not reproducible, iteration budgets are.
struct TabuParams {
  std::uint64_t max_iters = 100000;
  double max_seconds = 0.0;            ///< 0 = no wall-clock limit
  std::uint32_t tenure = 0;            ///< 0 = default 10 + ceil(n / 10)
  std::uint64_t restart_interval = 0;  ///< non-improving moves before a restart; 0 = 50 n
};

/// Single-bit-flip tabu search over the QUBO: incremental flip gains,
/// aspiration for moves that beat the incumbent, restart from a fresh
/// random assignment after restart_interval non-improving moves. The
/// incumbent is never discarded, so the result is monotone in the
/// iteration budget. Deterministic for a fixed seed under an iteration
/// budget.
SolveResult solve_tabu(const QuboInstance& q, const TabuParams& params,
                       std::uint64_t seed);

}  // namespace rescut
