#pragma once

#include "puv/kernels.hpp"

namespace puv {

// Momentum-representation harmonic-oscillator propagator for
// H = p^2/2 + w^2 q^2/2:
//   <P'| exp(-i H t) |P> = (2 pi i w sin wt)^{-1/2}
//                          exp{ i [ (P^2 + P'^2) cos wt - 2 P P' ] / (2 w sin wt) }.
// Principal square root (valid between caustics). Throws "caustic time" when
// sin(wt) vanishes.
cdouble mehler_momentum_kernel(double omega, cdouble t, cdouble p_in, cdouble p_out);

}  // namespace puv
