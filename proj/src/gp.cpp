#include "ucbde/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include <Eigen/Cholesky>

namespace ucbde {

std::string format_point(const Point& x) {
  std::ostringstream out;
  out.precision(17);
  out << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << x[i];
  }
  out << ')';
  return out.str();
}

Standardized standardize(std::span<const double> raw) {
  if (raw.empty()) throw Error("standardize: empty output list");
  Standardized s;
  const double n = static_cast<double>(raw.size());
  double sum = 0.0;
  for (double v : raw) sum += v;
  s.mean = sum / n;
  double ss = 0.0;
  for (double v : raw) ss += (v - s.mean) * (v - s.mean);
  const double sd = std::sqrt(ss / n);
  s.values.assign(raw.size(), 0.0);
  // Round-off on a constant list leaves sd at a few ulps of the mean.
  if (!(sd > 1e-12 * std::max(1.0, std::abs(s.mean)))) {
    s.std_dev = 1.0;
    return s;
  }
  s.std_dev = sd;
  for (std::size_t i = 0; i < raw.size(); ++i) s.values[i] = (raw[i] - s.mean) / sd;
  return s;
}

ObservationSet::ObservationSet(int dim) : dim_(dim) {
  if (dim <= 0) throw DimensionError("ObservationSet: dimension must be positive");
}

void ObservationSet::check_point(const Point& x) const {
  if (x.size() != dim_)
    throw DimensionError("ObservationSet: expected dimension " + std::to_string(dim_) + ", got " +
                         std::to_string(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x[i] >= 0.0 && x[i] <= 1.0))
      throw Error("ObservationSet: input outside the unit cube: " + format_point(x));
}

void ObservationSet::add(const Point& x, double y) {
  check_point(x);
  if (!std::isfinite(y)) throw Error("ObservationSet: non-finite output at " + format_point(x));
  inputs_.push_back(x);
  raw_.push_back(y);
  std_ = standardize(raw_);
}

void ObservationSet::add(const PointList& xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error("ObservationSet: inputs/outputs length mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    check_point(xs[i]);
    if (!std::isfinite(ys[i]))
      throw Error("ObservationSet: non-finite output at " + format_point(xs[i]));
  }
  inputs_.insert(inputs_.end(), xs.begin(), xs.end());
  raw_.insert(raw_.end(), ys.begin(), ys.end());
  if (!raw_.empty()) std_ = standardize(raw_);
}

double ObservationSet::best_raw() const {
  if (raw_.empty()) throw Error("ObservationSet: no observations");
  double best = raw_.front();
  for (double v : raw_) best = std::max(best, v);
  return best;
}

double se_kernel(const Point& a, const Point& b, double lengthscale) {
  if (a.size() != b.size()) throw DimensionError("se_kernel: dimension mismatch");
  if (!(lengthscale > 0.0)) throw Error("se_kernel: lengthscale must be positive");
  return std::exp(-(a - b).squaredNorm() / (2.0 * lengthscale * lengthscale));
}

std::vector<double> default_lengthscale_grid() {
  constexpr int kCount = 40;
  const double lo = std::log(0.01);
  const double hi = std::log(10.0);
  std::vector<double> grid(kCount);
  for (int i = 0; i < kCount; ++i) grid[i] = std::exp(lo + (hi - lo) * i / (kCount - 1));
  return grid;
}

SingularKernelError::SingularKernelError(double lengthscale)
    : Error("kernel matrix is singular even after jitter escalation (lengthscale " +
            std::to_string(lengthscale) + ")"),
      lengthscale_(lengthscale) {}

Eigen::MatrixXd to_matrix(const PointList& points, int dim) {
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw DimensionError("point dimension mismatch");
    m.col(static_cast<Eigen::Index>(i)) = points[i];
  }
  return m;
}

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& inputs, double lengthscale) {
  const Eigen::Index n = inputs.cols();
  const double scale = -1.0 / (2.0 * lengthscale * lengthscale);
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    k(j, j) = 1.0;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      k(i, j) = std::exp(scale * (inputs.col(i) - inputs.col(j)).squaredNorm());
      k(j, i) = k(i, j);
    }
  }
  return k;
}

bool factorize(const Eigen::MatrixXd& gram, double noise_var, Eigen::MatrixXd& chol,
               double& jitter) {
  const Eigen::Index n = gram.rows();
  for (double j : kJitterLadder) {
    Eigen::MatrixXd a = gram;
    a.diagonal().array() += noise_var + j;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) continue;
    Eigen::MatrixXd l = llt.matrixL();
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i) ok = std::isfinite(l(i, i)) && l(i, i) > 0.0;
    if (!ok) continue;
    chol = std::move(l);
    jitter = j;
    return true;
  }
  return false;
}

GpModel GpModel::condition(const PointList& inputs, std::span<const double> targets,
                           double lengthscale, double noise_var) {
  if (inputs.empty()) throw Error("GpModel: at least one observation is required");
  if (inputs.size() != targets.size()) throw Error("GpModel: inputs/targets length mismatch");
  if (!(lengthscale > 0.0)) throw Error("GpModel: lengthscale must be positive");
  if (!(noise_var >= 0.0)) throw Error("GpModel: noise variance must be non-negative");

  GpModel m;
  m.inputs_ = to_matrix(inputs, static_cast<int>(inputs.front().size()));
  m.targets_ = Eigen::Map<const Eigen::VectorXd>(targets.data(),
                                                 static_cast<Eigen::Index>(targets.size()));
  m.lengthscale_ = lengthscale;
  m.noise_var_ = noise_var;
  if (!factorize(kernel_matrix(m.inputs_, lengthscale), noise_var, m.chol_, m.jitter_))
    throw SingularKernelError(lengthscale);

  const Eigen::VectorXd z = m.chol_.triangularView<Eigen::Lower>().solve(m.targets_);
  m.alpha_ = m.chol_.transpose().triangularView<Eigen::Upper>().solve(z);
  const double n = static_cast<double>(targets.size());
  m.log_ml_ = -0.5 * z.squaredNorm() - m.chol_.diagonal().array().log().sum() -
              0.5 * n * std::log(2.0 * std::numbers::pi);
  return m;
}

GpModel GpModel::fit(const ObservationSet& obs, double noise_var, std::span<const double> grid) {
  if (obs.empty()) throw Error("GpModel::fit: empty observation set");
  if (grid.empty()) throw Error("GpModel::fit: empty lengthscale grid");
  for (double l : grid)
    if (!(l > 0.0)) throw Error("GpModel::fit: lengthscale grid values must be positive");

  const auto& y = obs.std_outputs();
  // All-zero targets carry no information about the lengthscale.
  const bool degenerate = std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; });
  if (degenerate) return condition(obs.inputs(), y, grid.front(), noise_var);

  std::optional<GpModel> best;
  for (double l : grid) {
    GpModel candidate = condition(obs.inputs(), y, l, noise_var);
    if (!best || candidate.log_ml_ > best->log_ml_) best = std::move(candidate);
  }
  return std::move(*best);
}

GpModel GpModel::fit(const ObservationSet& obs, double noise_var) {
  const auto grid = default_lengthscale_grid();
  return fit(obs, noise_var, grid);
}

Eigen::VectorXd GpModel::cross_kernel(const Point& x) const {
  if (x.size() != inputs_.rows())
    throw DimensionError("GpModel: query dimension " + std::to_string(x.size()) +
                         " does not match model dimension " + std::to_string(inputs_.rows()));
  const double scale = -1.0 / (2.0 * lengthscale_ * lengthscale_);
  return (scale * (inputs_.colwise() - x).colwise().squaredNorm().transpose()).array().exp();
}

Posterior GpModel::posterior(const Point& x) const {
  const Eigen::VectorXd ks = cross_kernel(x);
  const double mu = ks.dot(alpha_);
  const Eigen::VectorXd v = chol_.triangularView<Eigen::Lower>().solve(ks);
  return {mu, std::max(1.0 - v.squaredNorm(), 1e-12)};
}

double GpModel::mean(const Point& x) const { return cross_kernel(x).dot(alpha_); }

}  // namespace ucbde
