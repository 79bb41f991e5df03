#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucbde/types.hpp"

namespace ucbde {

/// Black-box test function in the maximization convention.
struct BenchmarkFunction {
  std::string name;
  int dim = 0;
  std::vector<std::pair<double, double>> bounds;
  std::function<double(const Point&)> eval;  // native domain
  std::optional<double> known_best_value;
  std::optional<Point> known_best_point;     // native domain
  std::chrono::duration<double> sim_latency{0.0};
  std::string notes;

  Point to_native(const Point& u) const;
  Point to_unit(const Point& x) const;
  double eval_unit(const Point& u) const;
};

/// Registered names: branin, hartmann3, hartmann6, alpine2, gsobol.
std::vector<std::string> benchmark_names();

/// `dim` is required for alpine2 and gsobol and must match the fixed
/// dimension of the others when given.
BenchmarkFunction make_benchmark(const std::string& name, std::optional<int> dim = std::nullopt);

/// Values in input order; unit-cube inputs. With `parallel`, evaluations of
/// one batch overlap (one thread per point).
std::vector<double> evaluate_batch(const BenchmarkFunction& f, const PointList& points, bool parallel);

}  // namespace ucbde
