#include "ucbde/distance_exploration.hpp"

#include <limits>

#include "ucbde/sobol.hpp"

namespace ucbde {

std::string to_string(PointRole role) {
  switch (role) {
    case PointRole::Ucb: return "ucb";
    case PointRole::De: return "de";
    case PointRole::Random: return "random";
    case PointRole::Hallucinated: return "hallucinated";
  }
  return "unknown";
}

PoolExhaustedError::PoolExhaustedError()
    : Error("candidate pool exhausted: no alive Sobol point is away from the observations; "
            "increase M") {}

CandidatePool::CandidatePool(const PointList& points, std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (points.empty()) throw Error("CandidatePool: no candidate points");
  const int dim = static_cast<int>(points.front().size());
  points_ = to_matrix(points, dim);
  if (weights_.empty()) weights_.assign(dim, 1.0);
  if (static_cast<int>(weights_.size()) != dim)
    throw DimensionError("CandidatePool: weight vector does not match dimension");
  for (double w : weights_)
    if (!(w > 0.0)) throw Error("CandidatePool: distance weights must be positive");
  min_sq_dist_.assign(points.size(), std::numeric_limits<double>::infinity());
  alive_.assign(points.size(), 1);
  alive_count_ = points.size();
}

CandidatePool CandidatePool::sobol(int dim, std::size_t m, std::vector<double> weights) {
  return CandidatePool(sobol_points(dim, m), std::move(weights));
}

double CandidatePool::distance(const Point& a, const Point& b) const {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    s += weights_[j] * diff * diff;
  }
  return s;
}

void CandidatePool::update(const Point& x) {
  if (x.size() != dim()) throw DimensionError("CandidatePool: observation dimension mismatch");
  const Eigen::Index d = points_.rows();
  for (std::size_t m = 0; m < min_sq_dist_.size(); ++m) {
    if (!alive_[m]) continue;
    const double* s = points_.col(static_cast<Eigen::Index>(m)).data();
    double acc = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      const double diff = s[j] - x[j];
      acc += weights_[j] * diff * diff;
    }
    if (acc < min_sq_dist_[m]) min_sq_dist_[m] = acc;
    ++distance_evals_;
  }
}

void CandidatePool::update(const PointList& new_obs) {
  for (const auto& x : new_obs) update(x);
}

std::size_t CandidatePool::take_farthest() {
  std::size_t best = min_sq_dist_.size();
  double best_dist = 0.0;
  for (std::size_t m = 0; m < min_sq_dist_.size(); ++m) {
    if (alive_[m] && min_sq_dist_[m] > best_dist) {
      best = m;
      best_dist = min_sq_dist_[m];
    }
  }
  if (best == min_sq_dist_.size()) throw PoolExhaustedError();
  alive_[best] = 0;
  --alive_count_;
  return best;
}

BatchProposal fill_batch_de(CandidatePool& pool, const Point& first_point, int batch_size) {
  if (batch_size < 1) throw Error("fill_batch_de: batch size must be >= 1");
  if (static_cast<std::size_t>(batch_size - 1) > pool.alive_count()) throw PoolExhaustedError();
  const std::size_t before = pool.distance_evaluations();
  BatchProposal proposal;
  proposal.points.push_back(first_point);
  proposal.roles.push_back(PointRole::Ucb);
  pool.update(first_point);
  for (int i = 1; i < batch_size; ++i) {
    Point next = pool.farthest_point();
    pool.update(next);
    proposal.points.push_back(std::move(next));
    proposal.roles.push_back(PointRole::De);
  }
  proposal.counters.distance_evaluations = pool.distance_evaluations() - before;
  return proposal;
}

namespace {

double min_sq_dist_to(const PointList& obs, const Point& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : obs) best = std::min(best, (x - o).squaredNorm());
  return best;
}

}  // namespace

Point farthest_point_continuous(const PointList& obs, int dim, const RefineBudget& budget,
                                std::uint64_t seed, std::size_t* evaluations) {
  if (obs.empty()) throw Error("farthest_point_continuous: no observations");
  for (const auto& o : obs)
    if (o.size() != dim) throw DimensionError("farthest_point_continuous: observation dimension mismatch");
  auto result = maximize_acquisition([&](const Point& x) { return min_sq_dist_to(obs, x); }, dim,
                                     acquisition_candidates(dim), budget, seed);
  if (evaluations) *evaluations += result.evaluations;
  return result.point;
}

BatchProposal fill_batch_de_continuous(PointList augmented, const Point& first_point, int batch_size,
                                       const RefineBudget& budget, std::uint64_t seed) {
  if (batch_size < 1) throw Error("fill_batch_de_continuous: batch size must be >= 1");
  const int dim = static_cast<int>(first_point.size());
  BatchProposal proposal;
  proposal.points.push_back(first_point);
  proposal.roles.push_back(PointRole::Ucb);
  augmented.push_back(first_point);
  for (int i = 1; i < batch_size; ++i) {
    Point next = farthest_point_continuous(augmented, dim, budget, seed + static_cast<std::uint64_t>(i),
                                           &proposal.counters.score_evaluations);
    ++proposal.counters.inner_optimizer_calls;
    augmented.push_back(next);
    proposal.points.push_back(std::move(next));
    proposal.roles.push_back(PointRole::De);
  }
  return proposal;
}

}  // namespace ucbde
