#include "puv/mehler.hpp"

#include <cmath>
#include <stdexcept>

namespace puv {

cdouble mehler_momentum_kernel(double omega, cdouble t, cdouble p_in, cdouble p_out) {
  if (!(omega > 0.0))
    throw std::invalid_argument("mehler_momentum_kernel: omega must be positive");
  const cdouble s = std::sin(omega * t);
  const cdouble c = std::cos(omega * t);
  if (std::abs(s) < 1e-12) throw std::runtime_error("caustic time");
  const cdouble phase =
      cdouble{0.0, 1.0} * ((p_in * p_in + p_out * p_out) * c - 2.0 * p_in * p_out) /
      (2.0 * omega * s);
  return std::exp(phase) / std::sqrt(2.0 * M_PI * cdouble{0.0, 1.0} * omega * s);
}

}  // namespace puv
