#include "puv/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace puv {

void OperatorMatrix::validate() const {
  if (entries.rows() < 2 || entries.rows() != entries.cols())
    throw std::invalid_argument("OperatorMatrix: dim must be >= 2 and square");
  if (!entries.allFinite())
    throw std::invalid_argument("OperatorMatrix: entries must be finite");
}

LadderPair ladder_matrices(int n, double omega) {
  if (n < 2) throw std::invalid_argument("ladder_matrices: N must be >= 2");
  if (!(omega > 0.0)) throw std::invalid_argument("ladder_matrices: omega must be positive");

  OperatorMatrix q{Eigen::MatrixXcd::Zero(n, n), omega, "q"};
  OperatorMatrix p{Eigen::MatrixXcd::Zero(n, n), omega, "p"};
  for (int m = 0; m + 1 < n; ++m) {
    const double qe = std::sqrt((m + 1) / (2.0 * omega));
    q.entries(m, m + 1) = q.entries(m + 1, m) = qe;
    const double pe = std::sqrt(omega * (m + 1) / 2.0);
    p.entries(m + 1, m) = cdouble{0.0, pe};
    p.entries(m, m + 1) = cdouble{0.0, -pe};
  }
  return {std::move(q), std::move(p)};
}

Eigen::MatrixXcd multiply(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                          Exec exec) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXcd c(n, n);
  kernels::matmul(n, a.data(), b.data(), c.data(), exec);
  return c;
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b, Exec exec) {
  return {multiply(a.entries, b.entries, exec), a.basis_frequency,
          a.label + "*" + b.label};
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                            Exec exec) {
  return multiply(a, b, exec) - multiply(b, a, exec);
}

double max_abs_interior(const Eigen::MatrixXcd& m, int margin) {
  const int n = static_cast<int>(m.rows()) - margin;
  double worst = 0.0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

std::vector<cdouble> lowest_levels(const Eigen::MatrixXcd& m, int count) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("lowest_levels: eigensolver failed");
  std::vector<cdouble> ev(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + m.rows());
  std::sort(ev.begin(), ev.end(),
            [](cdouble x, cdouble y) { return x.real() < y.real(); });
  ev.resize(static_cast<std::size_t>(count));
  return ev;
}

}  // namespace puv
