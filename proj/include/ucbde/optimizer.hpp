#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ucbde/distance_exploration.hpp"
#include "ucbde/gp.hpp"
#include "ucbde/policies.hpp"
#include "ucbde/sobol.hpp"

namespace ucbde {

/// SplitMix64 finalizer applied to (base, stream); used for every derived seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Evaluates a batch of unit-cube points, returning values in order.
using BatchObjective = std::function<std::vector<double>(const PointList&)>;

struct OptimizerOptions {
  int batch_size = 10;
  std::size_t pool_size = 0;  // Sobol candidate count M; required by pool-based policies
  double noise_var = 1e-4;
  std::vector<double> lengthscale_grid = default_lengthscale_grid();
  std::vector<double> distance_weights;  // empty: isotropic
  const DirectionTable* sobol_table = nullptr;
};

struct IterationResult {
  int t = 0;
  BatchProposal proposal;
  std::vector<double> values;
  double gp_fit_seconds = 0.0;
  double eval_seconds = 0.0;
};

/// The batch BO loop: propose with a policy, evaluate, augment, refit.
class BatchOptimizer {
 public:
  BatchOptimizer(int dim, BatchObjective objective, std::unique_ptr<BatchPolicy> policy,
                 OptimizerOptions options, std::uint64_t seed);

  /// Evaluates the initial design D_0 and fits the first model.
  void initialize(const PointList& x0);
  /// Uses already-evaluated initial data.
  void initialize(const PointList& x0, const std::vector<double>& y0);

  IterationResult step();

  /// Posterior-mean maximizer over the unit cube.
  Point recommend() const;

  int iteration() const { return t_; }
  const ObservationSet& observations() const { return obs_; }
  const GpModel& model() const { return *model_; }
  const BatchPolicy& policy() const { return *policy_; }
  const CandidatePool* pool() const { return pool_ ? &*pool_ : nullptr; }
  double last_fit_seconds() const { return last_fit_seconds_; }

 private:
  void refit();

  int dim_;
  BatchObjective objective_;
  std::unique_ptr<BatchPolicy> policy_;
  OptimizerOptions options_;
  std::uint64_t seed_;
  ObservationSet obs_;
  std::optional<GpModel> model_;
  std::optional<CandidatePool> pool_;
  int t_ = 0;
  double last_fit_seconds_ = 0.0;
};

}  // namespace ucbde
