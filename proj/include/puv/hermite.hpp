#pragma once

#include <span>

namespace puv {

inline constexpr int kHermiteDegreeCeiling = 200;

// Physicists' Hermite polynomial H_n(q), three-term recurrence
// H_{n+1} = 2 q H_n - 2 n H_{n-1}. n <= 200.
double hermite_poly(int n, double q);

// Normalized harmonic-oscillator eigenfunction
//   phi_n^w(q) = (w/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(w) q) exp(-w q^2 / 2),
// evaluated by the normalized recurrence (stable up to n = 200).
double ho_eigenfunction(int n, double omega, double q);

// Fills out[0..count) with phi_0^w(q) .. phi_{count-1}^w(q).
void ho_eigenfunctions(int count, double omega, double q, std::span<double> out);

// d/dq phi_n^w(q) = -w q phi_n^w(q) + sqrt(2 n w) phi_{n-1}^w(q)
double ho_eigenfunction_derivative(int n, double omega, double q);

}  // namespace puv
