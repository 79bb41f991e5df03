#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "ucbde/types.hpp"

namespace ucbde {

/// Standardized view of a list of raw outputs (population standard deviation).
/// A constant list maps to all zeros with unit scale.
struct Standardized {
  std::vector<double> values;
  double mean = 0.0;
  double std_dev = 1.0;
};

Standardized standardize(std::span<const double> raw);

/// Observations D_t: unit-cube inputs with raw and standardized outputs.
/// Standardization is recomputed from scratch on every append.
class ObservationSet {
 public:
  explicit ObservationSet(int dim);

  void add(const Point& x, double y);
  void add(const PointList& xs, std::span<const double> ys);

  int dim() const { return dim_; }
  std::size_t size() const { return inputs_.size(); }
  bool empty() const { return inputs_.empty(); }

  const PointList& inputs() const { return inputs_; }
  const std::vector<double>& raw_outputs() const { return raw_; }
  const std::vector<double>& std_outputs() const { return std_.values; }
  double out_mean() const { return std_.mean; }
  double out_std() const { return std_.std_dev; }

  double best_raw() const;

 private:
  void check_point(const Point& x) const;

  int dim_;
  PointList inputs_;
  std::vector<double> raw_;
  Standardized std_;
};

double se_kernel(const Point& a, const Point& b, double lengthscale);

/// 40 log-spaced lengthscales over [0.01, 10].
std::vector<double> default_lengthscale_grid();

/// Jitter values tried, in order, when the kernel matrix fails to factor.
inline constexpr double kJitterLadder[] = {0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4};

class SingularKernelError : public Error {
 public:
  SingularKernelError(double lengthscale);
  double lengthscale() const { return lengthscale_; }

 private:
  double lengthscale_;
};

struct Posterior {
  double mean;
  double variance;
};

/// Zero-mean GP with isotropic SE kernel, conditioned on standardized data.
/// Immutable once built.
class GpModel {
 public:
  /// Conditions on (inputs, targets) for a fixed lengthscale.
  static GpModel condition(const PointList& inputs, std::span<const double> targets,
                           double lengthscale, double noise_var);

  /// Selects the lengthscale maximizing the log marginal likelihood over `grid`.
  static GpModel fit(const ObservationSet& obs, double noise_var,
                     std::span<const double> grid);
  static GpModel fit(const ObservationSet& obs, double noise_var = 1e-4);

  Posterior posterior(const Point& x) const;
  double mean(const Point& x) const;

  Eigen::VectorXd cross_kernel(const Point& x) const;

  int dim() const { return static_cast<int>(inputs_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(inputs_.cols()); }
  double lengthscale() const { return lengthscale_; }
  double noise_var() const { return noise_var_; }
  double jitter() const { return jitter_; }
  double log_marginal_likelihood() const { return log_ml_; }

  const Eigen::MatrixXd& inputs() const { return inputs_; }
  const Eigen::VectorXd& targets() const { return targets_; }
  const Eigen::MatrixXd& chol_factor() const { return chol_; }
  const Eigen::VectorXd& weights() const { return alpha_; }

 private:
  GpModel() = default;

  Eigen::MatrixXd inputs_;  // dim x N
  Eigen::VectorXd targets_;
  double lengthscale_ = 1.0;
  double noise_var_ = 0.0;
  double jitter_ = 0.0;
  Eigen::MatrixXd chol_;
  Eigen::VectorXd alpha_;
  double log_ml_ = 0.0;
};

/// Kernel matrix K(X, X) for dim x N inputs, without the noise term.
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& inputs, double lengthscale);

/// Lower Cholesky factor of `gram` + (noise_var + jitter) I, walking the jitter
/// ladder. Returns false when every rung fails.
bool factorize(const Eigen::MatrixXd& gram, double noise_var, Eigen::MatrixXd& chol,
               double& jitter);

Eigen::MatrixXd to_matrix(const PointList& points, int dim);

}  // namespace ucbde
