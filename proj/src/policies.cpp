#include "ucbde/policies.hpp"

#include <chrono>
#include <cmath>

namespace ucbde {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point uniform_point(std::mt19937_64& rng, int dim) {
  Point p(dim);
  for (int j = 0; j < dim; ++j) p[j] = uniform01(rng);
  return p;
}

// ---------------------------------------------------------------------------
// HallucinatedGp

HallucinatedGp::HallucinatedGp(const GpModel& base, bool update_mean)
    : base_(&base), update_mean_(update_mean), n_(static_cast<Eigen::Index>(base.size())) {
  const Eigen::Index cap = n_ + 8;
  inputs_.resize(base.dim(), cap);
  inputs_.leftCols(n_) = base.inputs();
  chol_.setZero(cap, cap);
  chol_.topLeftCorner(n_, n_) = base.chol_factor();
  targets_.resize(cap);
  targets_.head(n_) = base.targets();
  alpha_ = base.weights();
}

Eigen::VectorXd HallucinatedGp::cross_kernel(const Point& x) const {
  if (x.size() != inputs_.rows()) throw DimensionError("HallucinatedGp: query dimension mismatch");
  const double l = base_->lengthscale();
  const double scale = -1.0 / (2.0 * l * l);
  return (scale * (inputs_.leftCols(n_).colwise() - x).colwise().squaredNorm().transpose())
      .array()
      .exp();
}

void HallucinatedGp::add(const Point& x, double value) {
  const Eigen::VectorXd k = cross_kernel(x);
  const Eigen::VectorXd l = chol_.topLeftCorner(n_, n_).triangularView<Eigen::Lower>().solve(k);
  const double base_diag = 1.0 + base_->noise_var() + base_->jitter() - l.squaredNorm();
  double diag = -1.0;
  for (double extra : kJitterLadder) {
    if (base_diag + extra > 0.0) {
      diag = std::sqrt(base_diag + extra);
      break;
    }
  }
  if (!(diag > 0.0)) throw SingularKernelError(base_->lengthscale());

  if (n_ == inputs_.cols()) {
    const Eigen::Index cap = 2 * n_;
    inputs_.conservativeResize(Eigen::NoChange, cap);
    chol_.conservativeResize(cap, cap);
    targets_.conservativeResize(cap);
  }
  inputs_.col(n_) = x;
  chol_.row(n_).head(n_) = l.transpose();
  chol_(n_, n_) = diag;
  targets_[n_] = value;
  ++n_;

  if (update_mean_) {
    const auto block = chol_.topLeftCorner(n_, n_);
    const Eigen::VectorXd z = block.triangularView<Eigen::Lower>().solve(targets_.head(n_));
    alpha_ = block.transpose().triangularView<Eigen::Upper>().solve(z);
  }
}

double HallucinatedGp::mean(const Point& x) const {
  if (!update_mean_) return base_->mean(x);
  return cross_kernel(x).dot(alpha_);
}

double HallucinatedGp::variance(const Point& x) const {
  const Eigen::VectorXd v =
      chol_.topLeftCorner(n_, n_).triangularView<Eigen::Lower>().solve(cross_kernel(x));
  return std::max(1.0 - v.squaredNorm(), 1e-12);
}

Posterior HallucinatedGp::posterior(const Point& x) const { return {mean(x), variance(x)}; }

// ---------------------------------------------------------------------------
// Policies

BatchProposal BatchPolicy::propose(const PolicyContext& ctx) {
  if (ctx.batch_size < 0) throw Error("policy: batch size must be non-negative");
  if (ctx.t < 1) throw Error("policy: iteration index must be >= 1");
  if (uses_pool() && ctx.pool == nullptr) throw Error("policy '" + name() + "' requires a candidate pool");
  const auto start = std::chrono::steady_clock::now();
  BatchProposal proposal = ctx.batch_size == 0 ? BatchProposal{} : select(ctx);
  proposal.selection_time = std::chrono::steady_clock::now() - start;
  if (proposal.points.size() != static_cast<std::size_t>(ctx.batch_size))
    throw Error("policy '" + name() + "' returned the wrong number of points");
  return proposal;
}

Point BatchPolicy::ucb_point(const PolicyContext& ctx, SelectionCounters& counters) const {
  const int dim = ctx.model.dim();
  const double root_beta = std::sqrt(ucb_beta(ctx.model.size(), settings_.ucb));
  auto result = maximize_acquisition(
      [&](const Point& x) {
        const Posterior p = ctx.model.posterior(x);
        return p.mean + root_beta * std::sqrt(p.variance);
      },
      dim, acquisition_candidates(dim), settings_.refine, ctx.seed);
  ++counters.inner_optimizer_calls;
  counters.score_evaluations += result.evaluations;
  return result.point;
}

BatchProposal RandomPolicy::select(const PolicyContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  BatchProposal proposal;
  for (int b = 0; b < ctx.batch_size; ++b) {
    proposal.points.push_back(uniform_point(rng, ctx.obs.dim()));
    proposal.roles.push_back(PointRole::Random);
  }
  return proposal;
}

BatchProposal UcbRandPolicy::select(const PolicyContext& ctx) {
  BatchProposal proposal;
  proposal.points.push_back(ucb_point(ctx, proposal.counters));
  proposal.roles.push_back(PointRole::Ucb);
  std::mt19937_64 rng(ctx.seed);
  for (int b = 1; b < ctx.batch_size; ++b) {
    proposal.points.push_back(uniform_point(rng, ctx.obs.dim()));
    proposal.roles.push_back(PointRole::Random);
  }
  return proposal;
}

BatchProposal HallucinationPolicy::select(const PolicyContext& ctx) {
  BatchProposal proposal;
  proposal.points.push_back(ucb_point(ctx, proposal.counters));
  proposal.roles.push_back(PointRole::Ucb);
  if (ctx.batch_size == 1) return proposal;

  const int dim = ctx.model.dim();
  const auto& y = ctx.model.targets();
  const double lie = constant_liar_ ? y.maxCoeff() : 0.0;
  const double root_beta = std::sqrt(ucb_beta(ctx.model.size(), settings_.ucb));
  HallucinatedGp state(ctx.model, constant_liar_);
  for (int b = 1; b < ctx.batch_size; ++b) {
    state.add(proposal.points.back(), lie);
    auto result = maximize_acquisition(
        [&](const Point& x) {
          const Posterior p = state.posterior(x);
          return p.mean + root_beta * std::sqrt(p.variance);
        },
        dim, acquisition_candidates(dim), settings_.refine, ctx.seed + static_cast<std::uint64_t>(b));
    ++proposal.counters.inner_optimizer_calls;
    proposal.counters.score_evaluations += result.evaluations;
    proposal.points.push_back(std::move(result.point));
    proposal.roles.push_back(PointRole::Hallucinated);
  }
  return proposal;
}

BatchProposal UcbDePolicy::select(const PolicyContext& ctx) {
  SelectionCounters counters;
  Point first = ucb_point(ctx, counters);
  BatchProposal proposal = fill_batch_de(*ctx.pool, first, ctx.batch_size);
  proposal.counters.inner_optimizer_calls += counters.inner_optimizer_calls;
  proposal.counters.score_evaluations += counters.score_evaluations;
  return proposal;
}

BatchProposal UcbDeContinuousPolicy::select(const PolicyContext& ctx) {
  SelectionCounters counters;
  Point first = ucb_point(ctx, counters);
  BatchProposal proposal =
      fill_batch_de_continuous(ctx.obs.inputs(), first, ctx.batch_size, settings_.refine, ctx.seed);
  proposal.counters.inner_optimizer_calls += counters.inner_optimizer_calls;
  proposal.counters.score_evaluations += counters.score_evaluations;
  return proposal;
}

std::vector<std::string> policy_names() {
  return {"random", "ucb-rand", "bucb", "cl", "ucb-de", "ucb-de-continuous"};
}

std::unique_ptr<BatchPolicy> make_policy(const std::string& name, const PolicySettings& settings) {
  if (name == "random") return std::make_unique<RandomPolicy>(settings);
  if (name == "ucb-rand") return std::make_unique<UcbRandPolicy>(settings);
  if (name == "bucb") return std::make_unique<BucbPolicy>(settings);
  if (name == "cl") return std::make_unique<ConstantLiarPolicy>(settings);
  if (name == "ucb-de") return std::make_unique<UcbDePolicy>(settings);
  if (name == "ucb-de-continuous") return std::make_unique<UcbDeContinuousPolicy>(settings);
  std::string known;
  for (const auto& n : policy_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown policy '" + name + "' (known: " + known + ")");
}

}  // namespace ucbde
