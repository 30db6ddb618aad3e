#include <chrono>
#include <limits>
#include <random>

#include "flip_model.hpp"
#include "rescut/errors.hpp"
#include "rescut/solve.hpp"

namespace rescut {

SolveResult solve_tabu(const QuboInstance& q, const TabuParams& params,
                       std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  if (params.max_iters == 0 && !(params.max_seconds > 0.0))
    throw ConfigError("tabu budget must be positive (iterations and/or seconds)");

  const std::size_t n = q.dimension();
  SolveResult result;
  result.solver_name = "tabu";
  result.exact = false;

  if (q.triplets().empty()) {
    // Nothing to optimize; every assignment scores 0.
    result.assignment = CutAssignment::zeros(n);
    result.objective = 0.0;
    result.elapsed_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

  const detail::FlipModel model(q);
  const std::uint64_t tenure =
      params.tenure > 0 ? params.tenure : 10 + (n + 9) / 10;
  const std::uint64_t restart_interval =
      params.restart_interval > 0 ? params.restart_interval : 50 * n;
  const std::uint64_t max_iters =
      params.max_iters > 0 ? params.max_iters : std::numeric_limits<std::uint64_t>::max();

  std::mt19937_64 rng(seed);
  auto random_bits = [&] {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    return bits;
  };

  std::vector<std::uint8_t> x = random_bits();
  std::vector<double> gains;
  model.fill_gains(x, gains);
  double f = model.objective(x);

  std::vector<std::uint8_t> best = x;
  double best_f = f;

  std::vector<std::uint64_t> tabu_until(n, 0);
  std::uint64_t stale = 0;

  for (std::uint64_t iter = 0; iter < max_iters; ++iter) {
    if (params.max_seconds > 0.0 && (iter & 63) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (elapsed >= params.max_seconds) break;
    }

    // Best admissible move: not tabu, or tabu but beating the incumbent
    // (aspiration). Ties go to the lowest index.
    std::size_t pick = n;
    double pick_gain = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n; ++v) {
      if (tabu_until[v] > iter && !(f + gains[v] > best_f)) continue;
      if (gains[v] > pick_gain) {
        pick_gain = gains[v];
        pick = v;
      }
    }
    if (pick == n) {
      // Everything tabu and nothing aspires; take the move expiring soonest.
      std::uint64_t soonest = std::numeric_limits<std::uint64_t>::max();
      for (std::size_t v = 0; v < n; ++v) {
        if (tabu_until[v] < soonest) {
          soonest = tabu_until[v];
          pick = v;
        }
      }
    }

    f += gains[pick];
    model.apply_flip(x, gains, pick);
    tabu_until[pick] = iter + 1 + tenure;

    if (f > best_f) {
      f = model.objective(x);  // resync before trusting the improvement
      if (f > best_f) {
        best_f = f;
        best = x;
        stale = 0;
      } else {
        ++stale;
      }
    } else {
      ++stale;
    }

    if (stale >= restart_interval) {
      x = random_bits();
      model.fill_gains(x, gains);
      f = model.objective(x);
      std::fill(tabu_until.begin(), tabu_until.end(), 0);
      stale = 0;
      if (f > best_f) {
        best_f = f;
        best = x;
      }
    }
  }

  result.assignment = CutAssignment(std::move(best));
  result.objective = qubo_objective(q, result.assignment);
  result.elapsed_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace rescut
