#pragma once

#include <Eigen/Dense>
#include <string>

#include "puv/kernels.hpp"

namespace puv {

// Dense complex operator in a truncated oscillator basis.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  double basis_frequency = 1.0;
  std::string label;

  int dim() const { return static_cast<int>(entries.rows()); }
  void validate() const;  // dim >= 2, entries finite
};

struct LadderPair {
  OperatorMatrix position;
  OperatorMatrix momentum;
};

// <m|q|n> = sqrt((n+1)/(2w)) on the superdiagonal pair; p is the hermitian
// conjugate-symmetric ladder momentum. N >= 2.
LadderPair ladder_matrices(int n, double omega);

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b,
                        Exec exec = Exec::par);
Eigen::MatrixXcd multiply(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                          Exec exec = Exec::par);
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                            Exec exec = Exec::par);

// max |entry| over the leading (n - margin) x (n - margin) block.
double max_abs_interior(const Eigen::MatrixXcd& m, int margin);

// Eigenvalues sorted by ascending real part, lowest `count`.
std::vector<cdouble> lowest_levels(const Eigen::MatrixXcd& m, int count);

}  // namespace puv
