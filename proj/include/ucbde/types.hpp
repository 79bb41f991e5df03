#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ucbde {

/// A location in the (scaled) search domain.
using Point = Eigen::VectorXd;
using PointList = std::vector<Point>;

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

std::string format_point(const Point& x);

}  // namespace ucbde
