#pragma once

#include <span>
#include <utility>
#include <vector>

#include "puv/operator_matrix.hpp"

namespace puv {

// Oscillator with Lagrangian q'^2/2 - q^2/2 - i e q q'; e is real.
struct ComplexOscParams {
  double epsilon = 0.3;
  int basis_size = 40;
  int quadrature_order = 0;  // 0 -> max(2 * basis_size, 80)

  int resolved_quadrature_order() const;
  void validate() const;                 // basis >= 4, order >= 2 * basis
  void require_normalizable() const;     // |epsilon| < 1 for function-space ops
};

// Coefficient functions of the momentum-representation propagator
//   <p_out, t | p_in, 0> = A exp{ i [ B (p_in^2 + p_out^2) - 2 p_in p_out ] / C }.
struct PropagatorABC {
  double t = 0.0;
  cdouble A, B, C;
};

struct GridSpec {
  double half_width = 8.0;
  double spacing = 1e-2;
};

struct SchrodingerResidual {
  double value = 0.0;
  bool grid_warning = false;  // spacing > 1e-2 or half_width < 8
};

enum class DerivativeMode { analytic, finite_difference };

struct RealityResiduals {
  double position;                 // ||q - q^adj||_max, mu-measure adjoint
  double momentum;                 // ||p^adj - p - 2 i e q||_max
  double momentum_nonhermiticity;  // ||p - p^dagger||_max (control; ~2 e ||q||)
};

struct L2Gram {
  Eigen::MatrixXcd gram;
  double smallest_eigenvalue = 0.0;
};

// H = p^2/2 + q^2/2 - e^2 q^2/2 + (i e / 2){p, q} in the w=1 ladder basis.
// Non-hermitian for e != 0; spectrum n + 1/2.
OperatorMatrix hc_matrix(const ComplexOscParams& params, Exec exec = Exec::par);

// psi_n(q) = exp(e q^2 / 2) phi_n(q). Requires |e| < 1.
double psi_n(const ComplexOscParams& params, int n, double q);

// Max over the interior grid of the second-order central-difference residual
// of  psi'' - 2 e q psi' - ((1 - e^2) q^2 + e - 2 E) psi  with E = n + 1/2
// + energy_shift.
SchrodingerResidual schrodinger_residual(const ComplexOscParams& params, int n,
                                         const GridSpec& grid,
                                         double energy_shift = 0.0);

// Gram matrix <n|m> under the measure exp(-e q^2) dq; identity for |e| < 1.
Eigen::MatrixXcd mu_gram(const ComplexOscParams& params, int nmax,
                         Exec exec = Exec::par);
cdouble mu_inner(const ComplexOscParams& params, int n, int m);

// Gram matrix of the psi_n in plain L^2(R, dq), with its smallest eigenvalue.
// Reported as data: the transformed eigenfunctions are orthonormal only under
// the modified measure, yet this matrix comes out numerically positive
// definite for |e| < 1.
L2Gram l2_gram(const ComplexOscParams& params, int nmax, Exec exec = Exec::par);

// Max grid norm of  exp(-e q^2/2) H_C [exp(e q^2/2) phi_n] - H_HO phi_n
// over n in `indices`. Analytic derivatives give roundoff; the
// finite-difference mode exposes the O(h^2) discretization error.
double similarity_check(const ComplexOscParams& params, std::span<const int> indices,
                        DerivativeMode mode = DerivativeMode::analytic,
                        double fd_step = 1e-3);

// q and p built in the psi basis with the mu-measure Gram as metric;
// checks q^adj = q and p^adj = p + 2 i e q on the interior half-block.
RealityResiduals reality_conditions_check(const ComplexOscParams& params,
                                          Exec exec = Exec::par);

// Closed-form coefficients. denom(t) = (e^2 + 1) sin t - 2 i e cos t,
// A = (2 pi i denom)^{-1/2}, B = cos t + i e sin t, C = 2 denom.
// Throws "caustic time" when denom vanishes (e = 0, t = k pi).
PropagatorABC propagator_abc(double epsilon, double t);

cdouble propagator_kernel(double epsilon, double t, cdouble p_in, cdouble p_out);

// <P|p> = (2 pi e)^{-1/2} exp(-(p - P)^2 / (2 e)), e > 0.
cdouble basis_change_kernel(double epsilon, cdouble p, double P);

// Relative residual of the closed-form kernel against the double Gaussian
// contraction of two <P|p> kernels with the hermitian-variable Mehler
// propagator, max over sampled (p_in, p_out) pairs.
double propagator_relation_check(double epsilon, double t,
                                 std::span<const std::pair<double, double>> samples);

// Contraction of the kernel with exp(-p^2): errors |K*f - f(p_out)| along a
// sequence of (t, epsilon) pairs approaching (0, 0).
std::vector<double> propagator_delta_errors(
    std::span<const std::pair<double, double>> t_eps_pairs, double p_out);

// Completeness measure mu(p, p*) = (pi e)^{-1/2} exp((p - p*)^2 / (4 e)):
// max over test points P' of |contraction of exp(-P^2) - exp(-P'^2)|.
double completeness_check(double epsilon, std::span<const double> test_points);

}  // namespace puv
