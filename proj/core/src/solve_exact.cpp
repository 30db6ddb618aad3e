#include <bit>
#include <chrono>

#include "flip_model.hpp"
#include "rescut/errors.hpp"
#include "rescut/solve.hpp"

namespace rescut {

SolveResult solve_exact(const QuboInstance& q) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = q.dimension();
  if (n > kExactDimensionCap)
    throw SizeLimitError("exact solver refuses dimension " + std::to_string(n) +
                         " (cap " + std::to_string(kExactDimensionCap) + ")");

  const detail::FlipModel model(q);
  std::vector<std::uint8_t> x(n, 0);
  std::vector<std::uint8_t> best = x;
  double f = 0.0;
  double best_f = 0.0;

  if (n >= 2) {
    // Counter bit i is node i+1; node 0 stays on side 0. Successive
    // counters differ in a trailing bit run, so the objective is kept
    // incrementally and resynced from scratch periodically to stop
    // floating-point drift from accumulating over the sweep.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t c = 1; c < total; ++c) {
      std::uint64_t changed = c ^ (c - 1);
      while (changed) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(changed)) + 1;
        f += model.gain(x, v);
        x[v] ^= 1;
        changed &= changed - 1;
      }
      if ((c & 0x3FFFF) == 0) f = model.objective(x);
      if (f > best_f) {
        best = x;
        best_f = model.objective(best);
        f = best_f;
      }
    }
  }

  SolveResult result;
  result.assignment = CutAssignment(std::move(best));
  result.objective = qubo_objective(q, result.assignment);
  result.solver_name = "exact";
  result.exact = true;
  result.elapsed_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace rescut
