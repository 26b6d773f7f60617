#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>

#include "puv/kernels.hpp"

namespace puv {

// Quadratic exponent  -1/2 u^T M u + J.u + c0  over R^n, M complex symmetric.
struct GaussianForm {
  Eigen::MatrixXcd quadratic;  // M
  Eigen::VectorXcd linear;     // J
  cdouble constant{0.0, 0.0};  // c0

  int dim() const { return static_cast<int>(quadratic.rows()); }
  void validate() const;  // square, symmetric to 1e-12, sizes match
};

// (2 pi)^{n/2} det(M + dI)^{-1/2} exp(1/2 J^T (M + dI)^{-1} J + c0).
//
// det^{-1/2} is the product of principal inverse square roots of the shifted
// eigenvalues (lambda_i + d). This is the branch tracked continuously from a
// reference positive-definite form M + tau I, tau large: along a real shift
// path each factor moves on a horizontal line in C and cannot reach the other
// sheet without passing through 0, which is reported as
// "degenerate quadratic form".
cdouble gaussian_integral(const GaussianForm& form, double delta = 0.0);

inline constexpr double kDefaultDeltas[] = {1e-2, 1e-3, 1e-4};

// Polynomial (Neville) extrapolation of gaussian_integral to delta -> 0.
cdouble gaussian_integral_extrapolated(
    const GaussianForm& form, std::span<const double> deltas = kDefaultDeltas);

// Recovers a GaussianForm from a quadratic scalar function by probing it at
// 0, +/-e_i and e_i + e_j.
GaussianForm probe_quadratic(
    const std::function<cdouble(std::span<const double>)>& exponent, int n);

}  // namespace puv
