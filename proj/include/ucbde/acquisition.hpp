#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ucbde/gp.hpp"
#include "ucbde/types.hpp"

namespace ucbde {

struct UcbParams {
  double delta = 0.1;
  std::optional<double> beta_override;
};

/// beta_t = 2 log(N^2 pi^2 / (6 delta)), N = number of observations.
double ucb_beta(std::size_t n_obs, const UcbParams& params);

/// mu(x) + sqrt(beta_t) sigma(x). `t` is the 1-based iteration index.
double ucb_value(const GpModel& model, const Point& x, int t, const UcbParams& params);

/// Work allowed for the multi-start pattern search.
struct RefineBudget {
  int n_starts = 5;
  int max_evals_per_start = -1;  // < 0: 50 * dim
  double step_init = 0.05;
  double step_min = 1e-4;

  int evals_per_start(int dim) const { return max_evals_per_start < 0 ? 50 * dim : max_evals_per_start; }
};

using ScoreFn = std::function<double(const Point&)>;

struct AcquisitionResult {
  Point point;
  double score = 0.0;
  std::size_t evaluations = 0;
};

/// Scores every candidate, then refines the top n_starts by coordinate pattern
/// search clamped to the unit cube. Ties go to the lowest candidate index.
AcquisitionResult maximize_acquisition(const ScoreFn& score, int dim, const PointList& candidates,
                                       const RefineBudget& budget, std::uint64_t rng_seed);

/// 100 * dim Sobol points used to seed every inner maximization.
const PointList& acquisition_candidates(int dim);

}  // namespace ucbde
