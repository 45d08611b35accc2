#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace minbreg {

using Vector = Eigen::VectorXd;
// Rows are examples; solvers touch one row per step, so row-major storage.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

// Runtime numerical diagnostics (unbounded dual, singular oracle, ...).
// Input/validation problems use std::invalid_argument instead.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minbreg
