#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ucbde/gp.hpp"

using namespace ucbde;

namespace {

PointList random_inputs(std::mt19937_64& rng, int n, int d) { return oracle::random_points(rng, n, d); }

}  // namespace

TEST_CASE("se_kernel values") {
  CHECK(se_kernel(Point{{0.3, 0.7}}, Point{{0.3, 0.7}}, 1.0) == doctest::Approx(1.0));
  CHECK(se_kernel(Point{{0.0}}, Point{{1.0}}, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(se_kernel(Point{{0.0}}, Point{{1.0}}, 1.0) == doctest::Approx(0.606531).epsilon(1e-6));
  CHECK(se_kernel(Point{{0.0, 0.0}}, Point{{3.0, 4.0}}, 5.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  const Point a{{0.1, 0.9}}, b{{0.4, 0.2}};
  CHECK(se_kernel(a, b, 0.3) == se_kernel(b, a, 0.3));
}

TEST_CASE("se_kernel errors") {
  CHECK_THROWS_AS(se_kernel(Point{{0.0}}, Point{{0.0, 1.0}}, 1.0), DimensionError);
  CHECK_THROWS_AS(se_kernel(Point{{0.0}}, Point{{1.0}}, 0.0), Error);
  CHECK_THROWS_AS(se_kernel(Point{{0.0}}, Point{{1.0}}, -1.0), Error);
}

TEST_CASE("standardize examples") {
  auto s = standardize(std::vector<double>{2.0, 4.0});
  CHECK(s.values == std::vector<double>{-1.0, 1.0});
  CHECK(s.mean == 3.0);
  CHECK(s.std_dev == 1.0);

  s = standardize(std::vector<double>{5.0});
  CHECK(s.values == std::vector<double>{0.0});
  CHECK(s.mean == 5.0);
  CHECK(s.std_dev == 1.0);

  s = standardize(std::vector<double>{7.0, 7.0, 7.0});
  CHECK(s.values == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(s.mean == 7.0);
  CHECK(s.std_dev == 1.0);

  CHECK_THROWS_AS(standardize(std::vector<double>{}), Error);
}

TEST_CASE("ObservationSet keeps standardized outputs consistent") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(4.0, 9.0);
  ObservationSet obs(2);
  for (int i = 0; i < 30; ++i) {
    obs.add(random_inputs(rng, 1, 2).front(), n(rng));
    if (obs.size() < 2) continue;
    const auto& z = obs.std_outputs();
    const double mean = std::accumulate(z.begin(), z.end(), 0.0) / z.size();
    double ss = 0.0;
    for (double v : z) ss += (v - mean) * (v - mean);
    CHECK(std::abs(mean) < 1e-10);
    CHECK(std::abs(std::sqrt(ss / z.size()) - 1.0) < 1e-10);
    for (std::size_t k = 0; k < z.size(); ++k)
      CHECK(z[k] == (obs.raw_outputs()[k] - obs.out_mean()) / obs.out_std());
  }
  CHECK(obs.inputs().size() == obs.raw_outputs().size());
  CHECK_THROWS_AS(obs.add(Point{{0.5, 1.5}}, 0.0), Error);
  CHECK_THROWS_AS(obs.add(Point{{0.5}}, 0.0), DimensionError);
  CHECK_THROWS_AS(obs.add(Point{{0.5, 0.5}}, std::nan("")), Error);
}

TEST_CASE("fit with a single observation") {
  ObservationSet obs(3);
  obs.add(Point{{0.2, 0.4, 0.6}}, 1.5);
  const GpModel m = GpModel::fit(obs);
  CHECK(m.size() == 1);
  CHECK(std::isfinite(m.log_marginal_likelihood()));
}

TEST_CASE("fit on constant outputs returns the first grid value") {
  ObservationSet obs(1);
  for (double x : {0.1, 0.4, 0.8}) obs.add(Point{{x}}, 2.0);
  const std::vector<double> grid{0.3, 0.05, 2.0};
  const GpModel m = GpModel::fit(obs, 1e-4, grid);
  CHECK(m.lengthscale() == 0.3);
  for (double v : obs.std_outputs()) CHECK(v == 0.0);
}

TEST_CASE("fit recovers the lengthscale of a GP sample") {
  // 20 inputs drawn from a GP prior with lengthscale 0.2.
  std::mt19937_64 rng(2024);
  const PointList xs = random_inputs(rng, 20, 1);
  Eigen::MatrixXd k(20, 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) k(i, j) = oracle::se(xs[i], xs[j], 0.2) + (i == j ? 1e-8 : 0.0);
  const Eigen::MatrixXd l = k.llt().matrixL();
  std::normal_distribution<double> g;
  Eigen::VectorXd z(20);
  for (auto& v : z) v = g(rng);
  const Eigen::VectorXd f = l * z;

  ObservationSet obs(1);
  for (int i = 0; i < 20; ++i) obs.add(xs[i], f[i]);
  const auto grid = default_lengthscale_grid();
  const GpModel m = GpModel::fit(obs, 1e-4, grid);

  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(obs.std_outputs().data(), 20);
  auto oracle_lml = [&](double ls) { return oracle::DirectGp(xs, y, ls, 1e-4).log_ml(); };

  // Same grid, direct-inverse likelihood.
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (oracle_lml(grid[i]) > oracle_lml(grid[best])) best = i;
  CHECK(m.lengthscale() == grid[best]);
  CHECK(m.log_marginal_likelihood() == doctest::Approx(oracle_lml(grid[best])).epsilon(1e-8));

  // Fine-grid optimum.
  double fine_best = 0.01, fine_val = -1e300;
  for (int i = 0; i <= 2000; ++i) {
    const double ls = std::exp(std::log(0.01) + (std::log(10.0) - std::log(0.01)) * i / 2000.0);
    const double v = oracle_lml(ls);
    if (v > fine_val) {
      fine_val = v;
      fine_best = ls;
    }
  }
  CHECK(fine_best / 0.2 < 3.0);
  CHECK(0.2 / fine_best < 3.0);
  CHECK(m.lengthscale() / 0.2 < 3.0);
  CHECK(0.2 / m.lengthscale() < 3.0);
  CHECK(m.log_marginal_likelihood() <= fine_val + 1e-9);
}

TEST_CASE("fit rejects bad grids") {
  ObservationSet obs(1);
  obs.add(Point{{0.5}}, 1.0);
  CHECK_THROWS_AS(GpModel::fit(obs, 1e-4, std::vector<double>{0.1, 0.0}), Error);
  CHECK_THROWS_AS(GpModel::fit(obs, 1e-4, std::vector<double>{}), Error);
  CHECK_THROWS_AS(GpModel::fit(ObservationSet(1), 1e-4), Error);
}

TEST_CASE("posterior interpolates and reverts to the prior") {
  const GpModel m = GpModel::condition({Point{{0.3}}}, std::vector<double>{1.0}, 0.2, 0.0);
  const Posterior at = m.posterior(Point{{0.3}});
  CHECK(at.mean == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at.variance <= 1e-6);

  const GpModel far = GpModel::condition({Point{{0.0, 0.0}}, Point{{0.1, 0.05}}}, std::vector<double>{1.0, -0.5},
                                         0.05, 1e-4);
  const Posterior p = far.posterior(Point{{1.0, 1.0}});
  CHECK(std::abs(p.mean) < 1e-3);
  CHECK(std::abs(p.variance - 1.0) < 1e-3);
  CHECK_THROWS_AS(far.posterior(Point{{1.0}}), DimensionError);
}

TEST_CASE("posterior matches the direct-inverse oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> nd(1, 25), dd(1, 6);
  std::uniform_real_distribution<double> ld(0.1, 1.0);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = nd(rng), d = dd(rng);
    const double ls = ld(rng);
    const PointList xs = random_inputs(rng, n, d);
    std::vector<double> y(n);
    for (auto& v : y) v = g(rng);
    const GpModel m = GpModel::condition(xs, y, ls, 1e-4);
    const oracle::DirectGp o(xs, Eigen::Map<Eigen::VectorXd>(y.data(), n), ls, 1e-4 + m.jitter());
    for (const auto& q : random_inputs(rng, 10, d)) {
      const Posterior p = m.posterior(q);
      CHECK(std::abs(p.mean - o.mean(q)) < 1e-8);
      CHECK(std::abs(p.variance - o.variance(q)) < 1e-8);
      CHECK(p.variance > 0.0);
      CHECK(p.variance <= 1.0 + 1e-4);
    }
    CHECK(m.log_marginal_likelihood() == doctest::Approx(o.log_ml()).epsilon(1e-9));
    for (Eigen::Index i = 0; i < m.chol_factor().rows(); ++i) CHECK(m.chol_factor()(i, i) > 0.0);
  }
}

TEST_CASE("posterior variance does not grow when data is added") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int rep = 0; rep < 20; ++rep) {
    PointList xs = random_inputs(rng, 8, 3);
    std::vector<double> y(8);
    for (auto& v : y) v = g(rng);
    const GpModel before = GpModel::condition(xs, y, 0.3, 1e-4);
    xs.push_back(random_inputs(rng, 1, 3).front());
    y.push_back(g(rng));
    const GpModel after = GpModel::condition(xs, y, 0.3, 1e-4);
    for (const auto& q : random_inputs(rng, 50, 3))
      CHECK(after.posterior(q).variance <= before.posterior(q).variance + 1e-10);
  }
}

TEST_CASE("log marginal likelihood is permutation invariant") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g;
  PointList xs = random_inputs(rng, 15, 4);
  std::vector<double> y(15);
  for (auto& v : y) v = g(rng);
  const double base = GpModel::condition(xs, y, 0.4, 1e-4).log_marginal_likelihood();
  std::vector<int> perm(15);
  std::iota(perm.begin(), perm.end(), 0);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(perm.begin(), perm.end(), rng);
    PointList px;
    std::vector<double> py;
    for (int i : perm) {
      px.push_back(xs[i]);
      py.push_back(y[i]);
    }
    CHECK(std::abs(GpModel::condition(px, py, 0.4, 1e-4).log_marginal_likelihood() - base) < 1e-9);
  }
}

TEST_CASE("jitter escalation handles duplicated inputs") {
  const PointList xs{Point{{0.2, 0.2}}, Point{{0.2, 0.2}}, Point{{0.7, 0.1}}, Point{{0.7, 0.1}}};
  const std::vector<double> y{1.0, 1.0, -1.0, -1.0};
  const GpModel m = GpModel::condition(xs, y, 0.5, 0.0);
  CHECK(m.jitter() >= 1e-10);
  CHECK(m.jitter() <= 1e-4);
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(m.chol_factor()(i, i) > 0.0);
  CHECK(std::abs(m.mean(Point{{0.2, 0.2}}) - 1.0) < 1e-3);
}

TEST_CASE("near-noiseless model interpolates training data") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  const PointList xs = random_inputs(rng, 10, 2);
  std::vector<double> y(10);
  for (auto& v : y) v = g(rng);
  const GpModel m = GpModel::condition(xs, y, 0.2, 1e-12);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(m.mean(xs[i]) - y[i]) < 1e-6);
}
