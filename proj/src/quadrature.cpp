#include "puv/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "puv/hermite.hpp"

namespace puv {

QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > 300) throw std::domain_error("gauss_hermite: order out of range");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.plain_weights.resize(order);

  if (order == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = rule.plain_weights[0] = std::sqrt(M_PI);
    return rule;
  }

  // Nodes: eigenvalues of the Jacobi matrix, off-diagonal beta_k = sqrt(k/2).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k)
    jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  Eigen::VectorXd x = solver.eigenvalues();

  // Enforce the exact +/- symmetry of the rule.
  for (int i = 0; i < order; ++i)
    rule.nodes[i] = 0.5 * (x[i] - x[order - 1 - i]);

  // Christoffel weights: 1/sum_k phi_k(x_i)^2 is the plain weight; the
  // Hermite functions keep every term O(1), so this stays accurate where the
  // eigenvector-based weights lose all relative precision in the tails.
  std::vector<double> phis(order);
  for (int i = 0; i < order; ++i) {
    ho_eigenfunctions(order, 1.0, rule.nodes[i], phis);
    double denom = 0.0;
    for (int k = 0; k < order; ++k) denom += phis[k] * phis[k];
    rule.plain_weights[i] = 1.0 / denom;
    rule.weights[i] = rule.plain_weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
  }
  return rule;
}

}  // namespace puv
