#pragma once

#include "minbreg/types.hpp"

namespace minbreg {

// One scalar closed convex target set: a singleton {y}, a half-line
// [lo, +inf), or an interval [lo, hi]. All variants are stored as a
// (possibly unbounded above) interval; the kind is kept for diagnostics.
struct ConstraintSet {
  enum class Kind { Singleton, HalfLine, Interval };

  Kind kind;
  double lo;
  double hi;  // +inf for HalfLine

  static ConstraintSet singleton(double y);
  static ConstraintSet half_line(double lo);
  static ConstraintSet interval(double lo, double hi);

  // Closest point of the set to v.
  double project(double v) const;

  // Support function sup_{y in set} y * a. Returns +inf for directions in
  // which the set is unbounded; never throws.
  double support(double a) const;
};

}  // namespace minbreg
