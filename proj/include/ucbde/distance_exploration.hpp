#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ucbde/acquisition.hpp"
#include "ucbde/types.hpp"

namespace ucbde {

enum class PointRole { Ucb, De, Random, Hallucinated };

std::string to_string(PointRole role);

/// Work counters collected while a batch is selected.
struct SelectionCounters {
  std::size_t inner_optimizer_calls = 0;
  std::size_t score_evaluations = 0;
  std::size_t distance_evaluations = 0;
};

struct BatchProposal {
  PointList points;
  std::vector<PointRole> roles;
  std::chrono::duration<double> selection_time{0.0};
  SelectionCounters counters;

  std::size_t size() const { return points.size(); }
};

class PoolExhaustedError : public Error {
 public:
  PoolExhaustedError();
};

/// Fixed set of Sobol candidates with a persistent cache of each candidate's
/// minimum weighted squared distance to the augmented observation set.
class CandidatePool {
 public:
  /// `weights` are the per-dimension 1/sigma_j factors; empty means all ones.
  explicit CandidatePool(const PointList& points, std::vector<double> weights = {});

  /// M Sobol points (skipping the origin).
  static CandidatePool sobol(int dim, std::size_t m, std::vector<double> weights = {});

  int dim() const { return static_cast<int>(points_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(points_.cols()); }
  std::size_t alive_count() const { return alive_count_; }

  Point point(std::size_t m) const { return points_.col(static_cast<Eigen::Index>(m)); }
  double min_sq_dist(std::size_t m) const { return min_sq_dist_[m]; }
  bool alive(std::size_t m) const { return alive_[m] != 0; }
  const std::vector<double>& weights() const { return weights_; }

  double distance(const Point& a, const Point& b) const;

  void update(const PointList& new_obs);
  void update(const Point& x);

  /// Alive candidate with the largest cached distance (lowest index on ties);
  /// the candidate is consumed.
  std::size_t take_farthest();
  Point farthest_point() { return point(take_farthest()); }

  std::size_t distance_evaluations() const { return distance_evals_; }

 private:
  Eigen::MatrixXd points_;  // dim x M
  std::vector<double> weights_;
  std::vector<double> min_sq_dist_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::size_t distance_evals_ = 0;
};

/// first_point followed by B-1 greedy farthest picks, each augmenting the pool.
BatchProposal fill_batch_de(CandidatePool& pool, const Point& first_point, int batch_size);

/// argmax_x min_i |x - x_i|^2 over the continuous unit cube.
Point farthest_point_continuous(const PointList& obs, int dim, const RefineBudget& budget,
                                std::uint64_t seed, std::size_t* evaluations = nullptr);

/// Continuous counterpart of fill_batch_de.
BatchProposal fill_batch_de_continuous(PointList augmented, const Point& first_point, int batch_size,
                                       const RefineBudget& budget, std::uint64_t seed);

}  // namespace ucbde
