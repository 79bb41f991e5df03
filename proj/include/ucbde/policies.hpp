#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ucbde/acquisition.hpp"
#include "ucbde/distance_exploration.hpp"
#include "ucbde/gp.hpp"

namespace ucbde {

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& rng);
Point uniform_point(std::mt19937_64& rng, int dim);

/// GP posterior extended by pending (hallucinated) points with frozen
/// hyperparameters. Variance always reflects every pending point; the mean
/// does so only when `update_mean` is set (constant liar), otherwise it stays
/// the batch-start mean (BUCB).
class HallucinatedGp {
 public:
  HallucinatedGp(const GpModel& base, bool update_mean);

  void add(const Point& x, double value);

  Posterior posterior(const Point& x) const;
  double mean(const Point& x) const;
  double variance(const Point& x) const;

  std::size_t size() const { return static_cast<std::size_t>(n_); }
  std::size_t pending() const { return static_cast<std::size_t>(n_) - base_->size(); }
  const Eigen::VectorXd targets() const { return targets_.head(n_); }

 private:
  Eigen::VectorXd cross_kernel(const Point& x) const;

  const GpModel* base_;
  bool update_mean_;
  Eigen::Index n_;
  Eigen::MatrixXd inputs_;  // dim x capacity
  Eigen::MatrixXd chol_;    // capacity x capacity, valid in the top-left n x n
  Eigen::VectorXd targets_;
  Eigen::VectorXd alpha_;
};

struct PolicySettings {
  UcbParams ucb;
  RefineBudget refine;
};

/// Everything a policy may read when proposing batch t.
struct PolicyContext {
  const GpModel& model;
  const ObservationSet& obs;
  CandidatePool* pool = nullptr;
  int batch_size = 1;
  int t = 1;
  std::uint64_t seed = 0;
};

class BatchPolicy {
 public:
  explicit BatchPolicy(PolicySettings settings) : settings_(settings) {}
  virtual ~BatchPolicy() = default;

  virtual std::string name() const = 0;
  /// Whether propose() reads and augments the candidate pool.
  virtual bool uses_pool() const { return false; }

  BatchProposal propose(const PolicyContext& ctx);

  const PolicySettings& settings() const { return settings_; }

 protected:
  virtual BatchProposal select(const PolicyContext& ctx) = 0;

  /// First batch point: argmax of UCB over the acquisition candidates.
  Point ucb_point(const PolicyContext& ctx, SelectionCounters& counters) const;

  PolicySettings settings_;
};

class RandomPolicy final : public BatchPolicy {
 public:
  using BatchPolicy::BatchPolicy;
  std::string name() const override { return "random"; }

 protected:
  BatchProposal select(const PolicyContext& ctx) override;
};

class UcbRandPolicy final : public BatchPolicy {
 public:
  using BatchPolicy::BatchPolicy;
  std::string name() const override { return "ucb-rand"; }

 protected:
  BatchProposal select(const PolicyContext& ctx) override;
};

/// Shared sequential-hallucination loop of BUCB and constant liar.
class HallucinationPolicy : public BatchPolicy {
 public:
  HallucinationPolicy(PolicySettings settings, bool constant_liar)
      : BatchPolicy(settings), constant_liar_(constant_liar) {}
  std::string name() const override { return constant_liar_ ? "cl" : "bucb"; }

 protected:
  BatchProposal select(const PolicyContext& ctx) override;

 private:
  bool constant_liar_;
};

class BucbPolicy final : public HallucinationPolicy {
 public:
  explicit BucbPolicy(PolicySettings settings) : HallucinationPolicy(settings, false) {}
};

class ConstantLiarPolicy final : public HallucinationPolicy {
 public:
  explicit ConstantLiarPolicy(PolicySettings settings) : HallucinationPolicy(settings, true) {}
};

class UcbDePolicy final : public BatchPolicy {
 public:
  using BatchPolicy::BatchPolicy;
  std::string name() const override { return "ucb-de"; }
  bool uses_pool() const override { return true; }

 protected:
  BatchProposal select(const PolicyContext& ctx) override;
};

/// UCB-DE with the farthest points found by continuous maximization instead of
/// the Sobol pool.
class UcbDeContinuousPolicy final : public BatchPolicy {
 public:
  using BatchPolicy::BatchPolicy;
  std::string name() const override { return "ucb-de-continuous"; }

 protected:
  BatchProposal select(const PolicyContext& ctx) override;
};

std::vector<std::string> policy_names();
std::unique_ptr<BatchPolicy> make_policy(const std::string& name, const PolicySettings& settings = {});

}  // namespace ucbde
