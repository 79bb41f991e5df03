#include "ucbde/optimizer.hpp"

#include <chrono>

#include "ucbde/acquisition.hpp"

namespace ucbde {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  return mix(base ^ mix(stream));
}

BatchOptimizer::BatchOptimizer(int dim, BatchObjective objective, std::unique_ptr<BatchPolicy> policy,
                               OptimizerOptions options, std::uint64_t seed)
    : dim_(dim),
      objective_(std::move(objective)),
      policy_(std::move(policy)),
      options_(std::move(options)),
      seed_(seed),
      obs_(dim) {
  if (!policy_) throw Error("BatchOptimizer: no policy");
  if (options_.batch_size < 1) throw Error("BatchOptimizer: batch size must be >= 1");
  if (policy_->uses_pool()) {
    if (options_.pool_size == 0) throw Error("BatchOptimizer: policy '" + policy_->name() + "' needs M > 0");
    const DirectionTable& table = options_.sobol_table ? *options_.sobol_table : default_direction_table();
    pool_.emplace(sobol_points(dim, options_.pool_size, 1, table), options_.distance_weights);
  }
}

void BatchOptimizer::initialize(const PointList& x0) { initialize(x0, objective_(x0)); }

void BatchOptimizer::initialize(const PointList& x0, const std::vector<double>& y0) {
  if (x0.empty()) throw Error("BatchOptimizer: initial design is empty");
  obs_.add(x0, y0);
  if (pool_) pool_->update(x0);
  refit();
}

void BatchOptimizer::refit() {
  const auto start = std::chrono::steady_clock::now();
  model_.emplace(GpModel::fit(obs_, options_.noise_var, options_.lengthscale_grid));
  last_fit_seconds_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

IterationResult BatchOptimizer::step() {
  if (!model_) throw Error("BatchOptimizer: initialize() must be called first");
  IterationResult r;
  r.t = ++t_;
  PolicyContext ctx{*model_, obs_, pool_ ? &*pool_ : nullptr, options_.batch_size, r.t,
                    derive_seed(seed_, static_cast<std::uint64_t>(r.t))};
  r.proposal = policy_->propose(ctx);

  const auto start = std::chrono::steady_clock::now();
  r.values = objective_(r.proposal.points);
  r.eval_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.values.size() != r.proposal.points.size())
    throw Error("BatchOptimizer: objective returned the wrong number of values");

  obs_.add(r.proposal.points, r.values);
  // Pool-based policies have already augmented the pool with every batch point.
  refit();
  r.gp_fit_seconds = last_fit_seconds_;
  return r;
}

Point BatchOptimizer::recommend() const {
  if (!model_) throw Error("BatchOptimizer: no model");
  const GpModel& m = *model_;
  return maximize_acquisition([&m](const Point& x) { return m.mean(x); }, dim_,
                              acquisition_candidates(dim_), policy_->settings().refine,
                              derive_seed(seed_, 0x5EC0000ull + static_cast<std::uint64_t>(t_)))
      .point;
}

}  // namespace ucbde
