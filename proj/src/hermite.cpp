#include "puv/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace puv {

double hermite_poly(int n, double q) {
  if (n < 0) throw std::domain_error("hermite_poly: negative degree");
  if (n > kHermiteDegreeCeiling) throw std::domain_error("degree too large");
  double hm1 = 0.0, h = 1.0;
  for (int k = 0; k < n; ++k) {
    const double hp1 = 2.0 * q * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

static void check_ho_args(int n, double omega) {
  if (n < 0) throw std::domain_error("ho_eigenfunction: negative index");
  if (n > kHermiteDegreeCeiling) throw std::domain_error("degree too large");
  if (!(omega > 0.0)) throw std::domain_error("ho_eigenfunction: omega must be positive");
}

void ho_eigenfunctions(int count, double omega, double q, std::span<double> out) {
  if (!(omega > 0.0)) throw std::domain_error("ho_eigenfunctions: omega must be positive");
  if (count <= 0) return;
  const double u = std::sqrt(omega) * q;
  const double scale = std::pow(omega, 0.25);
  // phi_{n+1} = sqrt(2/(n+1)) u phi_n - sqrt(n/(n+1)) phi_{n-1}
  out[0] = scale * std::pow(M_PI, -0.25) * std::exp(-u * u / 2.0);
  if (count > 1) out[1] = std::sqrt(2.0) * u * out[0];
  for (int n = 1; n + 1 < count; ++n)
    out[n + 1] = std::sqrt(2.0 / (n + 1)) * u * out[n] -
                 std::sqrt(n / (n + 1.0)) * out[n - 1];
}

double ho_eigenfunction(int n, double omega, double q) {
  check_ho_args(n, omega);
  std::vector<double> vals(static_cast<std::size_t>(n) + 1);
  ho_eigenfunctions(n + 1, omega, q, vals);
  return vals[static_cast<std::size_t>(n)];
}

double ho_eigenfunction_derivative(int n, double omega, double q) {
  check_ho_args(n, omega);
  const double phi = ho_eigenfunction(n, omega, q);
  const double below = n >= 1 ? ho_eigenfunction(n - 1, omega, q) : 0.0;
  return -omega * q * phi + std::sqrt(2.0 * n * omega) * below;
}

}  // namespace puv
