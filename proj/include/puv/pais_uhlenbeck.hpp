#pragma once

#include <span>
#include <vector>

#include "puv/operator_matrix.hpp"

namespace puv {

struct PUParams {
  double omega1 = 2.0;
  double omega2 = 1.0;

  void validate() const;  // omega1 > omega2 > 0 strictly
};

// The (a, b, c) triple of the decoupling map xi1 = i(a x + b x''),
// xi2 = c x + b x'':  a / w2^2 = b = c / w1^2 = sign / sqrt(w1^2 - w2^2).
struct TransformCoefficients {
  double a = 0.0, b = 0.0, c = 0.0;
  int sign = +1;
};

struct Jet {
  cdouble x, dx, d2x, d3x;
};

// Tensor oscillator basis, row-major: index = n1 * n2_size + n2.
struct TwoModeBasis {
  int n1 = 16;
  int n2 = 16;

  int dim() const { return n1 * n2; }
  int index(int i1, int i2) const { return i1 * n2 + i2; }
  void validate() const;  // n1, n2 >= 4
};

struct PUPropagatorCoeffs {
  double t;
  double d, f, g, j, k, m, n;
};

struct LagrangianValues {
  cdouble l_pu, l_xi, df_dt;
};

struct PhaseSpacePoint {
  cdouble x, z, pi_x, pi_z;
  cdouble f_generator;  // z * pi_z = -x' x''
};

struct MappedOperators {
  OperatorMatrix x, pi_x, z, pi_z;
};

struct PUSample {
  double p1_in, p2_in, p1_out, p2_out;
};

// Solves the jet-space matching of L_PU + d(x' x'')/dt against L_xi by Newton
// iteration on the extracted quadratic-form coefficients, then cross-checks
// the closed form; the two must agree to 1e-10.
// Throws "degenerate frequencies: transformation singular" for w1 == w2.
TransformCoefficients solve_coefficients(const PUParams& params, int sign = +1);

// L_PU, L_xi and d(x' x'')/dt = x''^2 + x' x''' at one jet point.
LagrangianValues lagrangian_values(const PUParams& params,
                                   const TransformCoefficients& coeffs,
                                   const Jet& jet);

// Pi_x = (w1^2 + w2^2) x' + x''', z = x', Pi_z = -x''.
PhaseSpacePoint ostrogradski_map(const PUParams& params, const Jet& jet);

// x = i b xi1 + b xi2, Pi_x = i a P1 + c P2, z = i b P1 + b P2,
// Pi_z = i c xi1 + a xi2 on the two-mode tensor basis.
MappedOperators mapped_operators(const PUParams& params,
                                 const TransformCoefficients& coeffs,
                                 const TwoModeBasis& basis, Exec exec = Exec::par);

// H_PU = -Pi_z^2/2 - (w1^2 + w2^2) z^2/2 + {z, Pi_x}/2 + w1^2 w2^2 x^2/2.
OperatorMatrix hpu_matrix(const PUParams& params, const TransformCoefficients& coeffs,
                          const TwoModeBasis& basis, Exec exec = Exec::par);

// Diagonal w1 (n1 + 1/2) + w2 (n2 + 1/2).
OperatorMatrix hxi_matrix(const PUParams& params, const TwoModeBasis& basis);

// Indices with n1 < N1 - 2 and n2 < N2 - 2 (two outer layers are corrupted by
// products of two ladder operators).
std::vector<int> interior_indices(const TwoModeBasis& basis);
Eigen::MatrixXcd interior_block(const Eigen::MatrixXcd& m, const TwoModeBasis& basis);

// The seven closed-form coefficient functions of t; all vanish at t = 0.
PUPropagatorCoeffs pu_propagator_coeffs(const PUParams& params, double t);

// Propagator between (x, Pi_z) eigenstates; out arguments are the literal
// starred labels. Built from the seven coefficients as
//   A(t) exp{(i/D)[ w1 w2 (F (x_out Pz_in + x_in Pz_out)
//                          + J (x_out Pz_out + x_in Pz_in)
//                          + M x_in x_out + N (x_out^2 + x_in^2)/2)
//                   + G Pz_in Pz_out + K (Pz_out^2 + Pz_in^2)/2 ]},
//   A(t) = sqrt(2 pi w1 / (i sin w1 t)) sqrt(2 pi w2 / (i sin w2 t)),
// which equals the contraction of the basis-change brackets with the two
// Mehler mode propagators. Throws "caustic time" when D vanishes.
cdouble pu_propagator_kernel(const PUParams& params, double t, cdouble x_in,
                             cdouble piz_in, cdouble x_out, cdouble piz_out);

// <P1,P2|x,Pi_z> = exp[(a x - b Pi_z) P1 + (-i c x + i b Pi_z) P2].
cdouble pu_basis_change(const TransformCoefficients& coeffs, cdouble x, cdouble piz,
                        double p1, double p2);

// Relative residual of the factorized two-mode Mehler propagator against the
// contraction of the kernel with the basis-change brackets over the
// delta-constrained measure d mu_PU (gamma = a alpha / b, rho = c beta / b
// eliminated by substitution), max over samples of real (P1, P2, P1', P2').
double pu_propagator_relation_check(const PUParams& params, double t,
                                    std::span<const PUSample> samples);

// Contraction of the kernel against a Gaussian test state over d mu_PU:
// errors versus the t -> 0 reproducing value, one per time.
std::vector<double> pu_propagator_delta_errors(const PUParams& params,
                                               std::span<const double> times,
                                               double alpha_out, double beta_out);

// Lowest `count` eigenvalues of the interior block of H_PU, sorted ascending.
// count <= dim/4; throws if any interior eigenvalue has |Im| > 1e-8.
std::vector<double> pu_spectrum(const PUParams& params, const TwoModeBasis& basis,
                                int count, Exec exec = Exec::par);

}  // namespace puv
