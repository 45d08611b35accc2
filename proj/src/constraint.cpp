#include "minbreg/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace minbreg {

ConstraintSet ConstraintSet::singleton(double y) {
  if (!std::isfinite(y)) {
    throw std::invalid_argument("ConstraintSet: singleton value must be finite");
  }
  return ConstraintSet{Kind::Singleton, y, y};
}

ConstraintSet ConstraintSet::half_line(double lo) {
  if (!std::isfinite(lo)) {
    throw std::invalid_argument("ConstraintSet: half-line bound must be finite");
  }
  return ConstraintSet{Kind::HalfLine, lo, std::numeric_limits<double>::infinity()};
}

ConstraintSet ConstraintSet::interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("ConstraintSet: interval bounds must be finite");
  }
  if (lo > hi) {
    throw std::invalid_argument("ConstraintSet: interval requires lo <= hi");
  }
  return ConstraintSet{Kind::Interval, lo, hi};
}

double ConstraintSet::project(double v) const {
  return std::clamp(v, lo, hi);
}

double ConstraintSet::support(double a) const {
  if (a > 0.0) {
    return std::isinf(hi) ? std::numeric_limits<double>::infinity() : hi * a;
  }
  if (a < 0.0) {
    return lo * a;
  }
  return 0.0;
}

}  // namespace minbreg
