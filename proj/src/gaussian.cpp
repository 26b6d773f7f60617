#include "puv/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace puv {

void GaussianForm::validate() const {
  const int n = dim();
  if (n < 1 || quadratic.cols() != n)
    throw std::invalid_argument("GaussianForm: quadratic matrix must be square");
  if (linear.size() != n)
    throw std::invalid_argument("GaussianForm: linear size mismatch");
  double scale = 1.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(quadratic(i, j)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (std::abs(quadratic(i, j) - quadratic(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("GaussianForm: quadratic matrix must be symmetric");
}

cdouble gaussian_integral(const GaussianForm& form, double delta) {
  form.validate();
  if (delta < 0.0) throw std::invalid_argument("gaussian_integral: delta must be >= 0");
  const int n = form.dim();

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(form.quadratic, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("gaussian_integral: eigensolver failed");

  double scale = delta;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(solver.eigenvalues()[i]));

  // Principal root per shifted eigenvalue = branch tracked from a large
  // positive shift (see header).
  cdouble log_det_half{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const cdouble shifted = solver.eigenvalues()[i] + delta;
    if (std::abs(shifted) < 1e-13 * scale)
      throw std::runtime_error("degenerate quadratic form");
    log_det_half += 0.5 * std::log(shifted);
  }

  Eigen::MatrixXcd shifted_m = form.quadratic;
  shifted_m.diagonal().array() += delta;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted_m);
  const Eigen::VectorXcd sol = lu.solve(form.linear);
  const cdouble quad_term = 0.5 * form.linear.transpose() * sol;

  return std::pow(2.0 * M_PI, n / 2.0) *
         std::exp(-log_det_half + quad_term + form.constant);
}

cdouble gaussian_integral_extrapolated(const GaussianForm& form,
                                       std::span<const double> deltas) {
  if (deltas.empty()) return gaussian_integral(form, 0.0);
  std::vector<double> xs(deltas.begin(), deltas.end());
  std::vector<cdouble> ys;
  ys.reserve(xs.size());
  for (double d : xs) ys.push_back(gaussian_integral(form, d));
  // Neville to delta = 0
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i + j < m; ++i)
      ys[i] += (ys[i + 1] - ys[i]) * (0.0 - xs[i]) / (xs[i + j] - xs[i]);
  return ys[0];
}

GaussianForm probe_quadratic(
    const std::function<cdouble(std::span<const double>)>& exponent, int n) {
  GaussianForm form;
  form.quadratic = Eigen::MatrixXcd::Zero(n, n);
  form.linear = Eigen::VectorXcd::Zero(n);
  std::vector<double> u(static_cast<std::size_t>(n), 0.0);
  const cdouble c0 = exponent(u);
  form.constant = c0;

  auto at = [&](int i, double vi, int j, double vj) {
    std::fill(u.begin(), u.end(), 0.0);
    u[static_cast<std::size_t>(i)] = vi;
    if (j >= 0) u[static_cast<std::size_t>(j)] = vj;
    return exponent(u);
  };

  for (int i = 0; i < n; ++i) {
    const cdouble plus = at(i, 1.0, -1, 0.0);
    const cdouble minus = at(i, -1.0, -1, 0.0);
    form.linear[i] = 0.5 * (plus - minus);
    form.quadratic(i, i) = -(plus + minus - 2.0 * c0);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const cdouble cross = at(i, 1.0, j, 1.0) - at(i, 1.0, -1, 0.0) -
                            at(j, 1.0, -1, 0.0) + c0;
      form.quadratic(i, j) = form.quadratic(j, i) = -cross;
    }
  return form;
}

}  // namespace puv
