#include "ucbde/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>

#include "ucbde/sobol.hpp"

namespace ucbde {

double ucb_beta(std::size_t n_obs, const UcbParams& params) {
  if (params.beta_override) {
    if (!(*params.beta_override >= 0.0)) throw Error("ucb: beta override must be non-negative");
    return *params.beta_override;
  }
  if (!(params.delta > 0.0 && params.delta < 1.0)) throw Error("ucb: delta must lie in (0, 1)");
  const double n = static_cast<double>(std::max<std::size_t>(n_obs, 1));
  return 2.0 * std::log(n * n * std::numbers::pi * std::numbers::pi / (6.0 * params.delta));
}

double ucb_value(const GpModel& model, const Point& x, int t, const UcbParams& params) {
  if (t < 1) throw Error("ucb: iteration index must be >= 1");
  const Posterior p = model.posterior(x);
  return p.mean + std::sqrt(ucb_beta(model.size(), params)) * std::sqrt(p.variance);
}

namespace {

double checked(const ScoreFn& score, const Point& x, std::size_t& evals) {
  const double v = score(x);
  ++evals;
  if (!std::isfinite(v)) throw Error("acquisition score is not finite at " + format_point(x));
  return v;
}

}  // namespace

AcquisitionResult maximize_acquisition(const ScoreFn& score, int dim, const PointList& candidates,
                                       const RefineBudget& budget, std::uint64_t rng_seed) {
  if (candidates.empty()) throw Error("maximize_acquisition: no candidates");
  if (budget.n_starts < 1 || budget.step_init <= 0.0 || budget.step_min <= 0.0)
    throw Error("maximize_acquisition: refine budget values must be positive");

  AcquisitionResult result;
  std::vector<double> values(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].size() != dim) throw DimensionError("maximize_acquisition: candidate dimension mismatch");
    values[i] = checked(score, candidates[i], result.evaluations);
  }

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  const std::size_t starts = std::min<std::size_t>(budget.n_starts, order.size());

  std::mt19937_64 rng(rng_seed);
  std::vector<int> coords(dim);
  std::iota(coords.begin(), coords.end(), 0);
  const int max_evals = budget.evals_per_start(dim);

  result.point = candidates[order[0]];
  result.score = values[order[0]];
  for (std::size_t s = 0; s < starts; ++s) {
    Point x = candidates[order[s]];
    double fx = values[order[s]];
    int used = 0;
    double step = budget.step_init;
    while (step >= budget.step_min && used < max_evals) {
      for (std::size_t i = coords.size(); i > 1; --i) std::swap(coords[i - 1], coords[rng() % i]);
      bool improved = false;
      for (int j : coords) {
        for (double dir : {1.0, -1.0}) {
          if (used >= max_evals) break;
          Point y = x;
          y[j] = std::clamp(x[j] + dir * step, 0.0, 1.0);
          if (y[j] == x[j]) continue;
          const double fy = checked(score, y, result.evaluations);
          ++used;
          if (fy > fx) {
            x = std::move(y);
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (fx > result.score) {
      result.point = std::move(x);
      result.score = fx;
    }
  }
  return result;
}

const PointList& acquisition_candidates(int dim) {
  static std::mutex mutex;
  static std::map<int, PointList> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, sobol_points(dim, 100 * static_cast<std::size_t>(dim))).first;
  return it->second;
}

}  // namespace ucbde
