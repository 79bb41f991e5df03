#pragma once

// Reference implementations that share no code path with the library:
// explicit matrix inverses, bit-reversal van der Corput, full rescans.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline double se(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double l) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return std::exp(-s / (2.0 * l * l));
}

/// GP posterior formed with an explicit (K + s I)^-1.
struct DirectGp {
  std::vector<Eigen::VectorXd> x;
  Eigen::VectorXd y;
  double l;
  Eigen::MatrixXd kinv;

  DirectGp(std::vector<Eigen::VectorXd> xs, Eigen::VectorXd ys, double lengthscale, double diag)
      : x(std::move(xs)), y(std::move(ys)), l(lengthscale) {
    const Eigen::Index n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) k(i, j) = se(x[i], x[j], l) + (i == j ? diag : 0.0);
    kinv = k.fullPivLu().inverse();
    logdet = k.fullPivLu().matrixLU().diagonal().array().abs().log().sum();
  }

  double logdet = 0.0;

  Eigen::VectorXd kstar(const Eigen::VectorXd& q) const {
    Eigen::VectorXd k(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) k[static_cast<Eigen::Index>(i)] = se(q, x[i], l);
    return k;
  }
  double mean(const Eigen::VectorXd& q) const { return kstar(q).dot(kinv * y); }
  double variance(const Eigen::VectorXd& q) const {
    const Eigen::VectorXd k = kstar(q);
    return std::max(1.0 - k.dot(kinv * k), 1e-12);
  }
  double log_ml() const {
    const double n = static_cast<double>(x.size());
    return -0.5 * y.dot(kinv * y) - 0.5 * logdet - 0.5 * n * std::log(2.0 * std::numbers::pi);
  }
};

/// Van der Corput radical inverse of gray(i): dimension 1 of the Sobol sequence.
inline double gray_van_der_corput(std::uint32_t i) {
  const std::uint32_t g = i ^ (i >> 1);
  std::uint32_t rev = 0;
  for (int b = 0; b < 32; ++b)
    if ((g >> b) & 1u) rev |= 1u << (31 - b);
  return rev / 4294967296.0;
}

/// Star-discrepancy estimate over anchored boxes [0,a) x [0,b) on a grid.
inline double box_discrepancy_2d(const std::vector<Eigen::VectorXd>& pts, int grid) {
  double worst = 0.0;
  const double n = static_cast<double>(pts.size());
  for (int i = 1; i <= grid; ++i)
    for (int j = 1; j <= grid; ++j) {
      const double a = static_cast<double>(i) / grid, b = static_cast<double>(j) / grid;
      int count = 0;
      for (const auto& p : pts) count += (p[0] < a && p[1] < b) ? 1 : 0;
      worst = std::max(worst, std::abs(count / n - a * b));
    }
  return worst;
}

inline double min_pairwise_distance(const std::vector<Eigen::VectorXd>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, (pts[i] - pts[j]).norm());
  return best;
}

inline std::vector<Eigen::VectorXd> random_points(std::mt19937_64& rng, int n, int d) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Eigen::VectorXd> pts(n, Eigen::VectorXd(d));
  for (auto& p : pts)
    for (int j = 0; j < d; ++j) p[j] = u(rng);
  return pts;
}

/// Greedy farthest-point selection rescanning every candidate against the full
/// augmented set at each step. Returns candidate indices.
inline std::vector<std::size_t> greedy_farthest(const std::vector<Eigen::VectorXd>& candidates,
                                                std::vector<Eigen::VectorXd> augmented,
                                                const Eigen::VectorXd& first, int picks,
                                                const std::vector<double>& w = {}) {
  auto dist = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
      s += (w.empty() ? 1.0 : w[static_cast<std::size_t>(j)]) * (a[j] - b[j]) * (a[j] - b[j]);
    return s;
  };
  augmented.push_back(first);
  std::vector<char> used(candidates.size(), 0);
  std::vector<std::size_t> out;
  for (int p = 0; p < picks; ++p) {
    std::size_t best = candidates.size();
    double best_d = 0.0;
    for (std::size_t m = 0; m < candidates.size(); ++m) {
      if (used[m]) continue;
      double g = std::numeric_limits<double>::infinity();
      for (const auto& a : augmented) g = std::min(g, dist(candidates[m], a));
      if (g > best_d) {
        best_d = g;
        best = m;
      }
    }
    if (best == candidates.size()) break;
    used[best] = 1;
    out.push_back(best);
    augmented.push_back(candidates[best]);
  }
  return out;
}

}  // namespace oracle
