#include "ucbde/benchmarks.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <thread>

namespace ucbde {

Point BenchmarkFunction::to_native(const Point& u) const {
  if (u.size() != dim) throw DimensionError(name + ": expected dimension " + std::to_string(dim));
  Point x(dim);
  for (int j = 0; j < dim; ++j) x[j] = bounds[j].first + u[j] * (bounds[j].second - bounds[j].first);
  return x;
}

Point BenchmarkFunction::to_unit(const Point& x) const {
  if (x.size() != dim) throw DimensionError(name + ": expected dimension " + std::to_string(dim));
  Point u(dim);
  for (int j = 0; j < dim; ++j) u[j] = (x[j] - bounds[j].first) / (bounds[j].second - bounds[j].first);
  return u;
}

double BenchmarkFunction::eval_unit(const Point& u) const { return eval(to_native(u)); }

namespace {

double branin(const Point& x) {
  constexpr double pi = std::numbers::pi;
  const double a = 1.0, b = 5.1 / (4.0 * pi * pi), c = 5.0 / pi, r = 6.0, s = 10.0,
               t = 1.0 / (8.0 * pi);
  const double u = x[1] - b * x[0] * x[0] + c * x[0] - r;
  return a * u * u + s * (1.0 - t) * std::cos(x[0]) + s;
}

constexpr double kHartmannAlpha[4] = {1.0, 1.2, 3.0, 3.2};

double hartmann3(const Point& x) {
  static constexpr double A[4][3] = {{3.0, 10, 30}, {0.1, 10, 35}, {3.0, 10, 30}, {0.1, 10, 35}};
  static constexpr double P[4][3] = {{0.3689, 0.1170, 0.2673},
                                     {0.4699, 0.4387, 0.7470},
                                     {0.1091, 0.8732, 0.5547},
                                     {0.0381, 0.5743, 0.8828}};
  double outer = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 3; ++j) inner += A[i][j] * (x[j] - P[i][j]) * (x[j] - P[i][j]);
    outer += kHartmannAlpha[i] * std::exp(-inner);
  }
  return -outer;
}

double hartmann6(const Point& x) {
  static constexpr double A[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                     {0.05, 10, 17, 0.1, 8, 14},
                                     {3, 3.5, 1.7, 10, 17, 8},
                                     {17, 8, 0.05, 10, 0.1, 14}};
  static constexpr double P[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                     {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                     {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                     {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
  double outer = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 6; ++j) inner += A[i][j] * (x[j] - P[i][j]) * (x[j] - P[i][j]);
    outer += kHartmannAlpha[i] * std::exp(-inner);
  }
  return -outer;
}

double alpine2(const Point& x) {
  double p = 1.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) p *= std::sqrt(x[j]) * std::sin(x[j]);
  return p;
}

// Root of tan(x) = -2x on [1, 10]: the per-coordinate maximizer of sqrt(x) sin(x).
constexpr double kAlpine2Argmax = 7.917052684666;

double gsobol_coeff(int j) { return std::max(0.0, (j - 2) / 2.0); }  // j is 1-based

double gsobol(const Point& x) {
  double p = 1.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double a = gsobol_coeff(static_cast<int>(j) + 1);
    p *= (std::abs(4.0 * x[j] - 2.0) + a) / (1.0 + a);
  }
  return p;
}

BenchmarkFunction fixed_dim(std::string name, int dim, std::optional<int> requested) {
  if (requested && *requested != dim)
    throw Error(name + " is defined only for dimension " + std::to_string(dim));
  BenchmarkFunction f;
  f.name = std::move(name);
  f.dim = dim;
  return f;
}

}  // namespace

std::vector<std::string> benchmark_names() { return {"branin", "hartmann3", "hartmann6", "alpine2", "gsobol"}; }

BenchmarkFunction make_benchmark(const std::string& name, std::optional<int> dim) {
  if (name == "branin") {
    auto f = fixed_dim(name, 2, dim);
    f.bounds = {{-5.0, 10.0}, {0.0, 15.0}};
    f.eval = [](const Point& x) { return -branin(x); };
    f.known_best_value = -0.39788735772973816;
    f.known_best_point = Point{{std::numbers::pi, 2.275}};
    f.notes = "negated Branin-Hoo";
    return f;
  }
  if (name == "hartmann3") {
    auto f = fixed_dim(name, 3, dim);
    f.bounds.assign(3, {0.0, 1.0});
    f.eval = [](const Point& x) { return -hartmann3(x); };
    f.known_best_point = Point{{0.114614, 0.555649, 0.852547}};
    f.known_best_value = -hartmann3(*f.known_best_point);
    f.notes = "negated Hartmann 3-D";
    return f;
  }
  if (name == "hartmann6") {
    auto f = fixed_dim(name, 6, dim);
    f.bounds.assign(6, {0.0, 1.0});
    f.eval = [](const Point& x) { return -hartmann6(x); };
    f.known_best_point = Point{{0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}};
    f.known_best_value = -hartmann6(*f.known_best_point);
    f.notes = "negated Hartmann 6-D";
    return f;
  }
  if (name == "alpine2" || name == "gsobol") {
    if (!dim) throw Error(name + " requires an explicit dimension");
    if (*dim < 1) throw DimensionError(name + ": dimension must be positive");
    BenchmarkFunction f;
    f.name = name;
    f.dim = *dim;
    if (name == "alpine2") {
      f.bounds.assign(*dim, {1.0, 10.0});
      f.eval = alpine2;
      f.known_best_point = Point::Constant(*dim, kAlpine2Argmax);
      f.known_best_value = alpine2(*f.known_best_point);
      f.notes = "prod sqrt(x_i) sin(x_i) on [1,10]^d";
    } else {
      f.bounds.assign(*dim, {0.0, 1.0});
      f.eval = [](const Point& x) { return -gsobol(x); };
      f.known_best_point = Point::Constant(*dim, 0.5);
      f.known_best_value = -gsobol(*f.known_best_point);
      f.notes = "negated g-Sobol, a_j = max(0, (j-2)/2)";
    }
    return f;
  }
  std::string known;
  for (const auto& n : benchmark_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown function '" + name + "' (known: " + known + ")");
}

std::vector<double> evaluate_batch(const BenchmarkFunction& f, const PointList& points, bool parallel) {
  for (const auto& u : points) {
    if (u.size() != f.dim) throw DimensionError(f.name + ": batch point dimension mismatch");
    for (int j = 0; j < f.dim; ++j)
      if (!(u[j] >= 0.0 && u[j] <= 1.0)) throw Error(f.name + ": point outside the unit cube " + format_point(u));
  }
  auto one = [&f](const Point& u) {
    if (f.sim_latency.count() > 0.0) std::this_thread::sleep_for(f.sim_latency);
    const double v = f.eval_unit(u);
    if (!std::isfinite(v)) throw Error(f.name + ": non-finite value at " + format_point(u));
    return v;
  };
  std::vector<double> values(points.size());
  if (!parallel || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i) values[i] = one(points[i]);
    return values;
  }
  std::vector<std::future<double>> futures;
  futures.reserve(points.size());
  for (const auto& u : points) futures.push_back(std::async(std::launch::async, one, std::cref(u)));
  for (std::size_t i = 0; i < points.size(); ++i) values[i] = futures[i].get();
  return values;
}

}  // namespace ucbde
