#pragma once

#include <span>

#include "puv/pais_uhlenbeck.hpp"

namespace puv {

// Free fourth-order scalar field; m1 > m2 >= 0.
struct FieldParams {
  double m1 = 2.0;
  double m2 = 1.0;

  void validate() const;
};

struct FieldSample {
  cdouble phi, box_phi;
};

struct PsiPair {
  cdouble psi1, psi2;
};

struct QuarticResiduals {
  double plus;   // |(phi phi*)^2 - (c-a)^{-4} (psi1^2 + psi2^2)^2|
  double minus;  // |(phi phi*)^2 + (c-a)^{-4} (psi1^2 + psi2^2)^2|
};

// Closed-form (a, b, c) with masses in place of frequencies.
TransformCoefficients field_coefficients(const FieldParams& params, int sign = +1);

// Plane-wave mode: omega_i = sqrt(k^2 + m_i^2).
PUParams mode_reduce(const FieldParams& params, double k);

// psi1 = i(a phi + b box phi), psi2 = c phi + b box phi.
PsiPair psi_map(const TransformCoefficients& coeffs, const FieldSample& sample);

// phi = b (psi2 + i psi1), box phi = (psi2 - c phi)/b.
FieldSample psi_inverse(const TransformCoefficients& coeffs, const PsiPair& pair);

// Both signs of the pointwise quartic identity over real-psi-sector samples;
// exactly one residual vanishes (the + sign, since (c-a)^2 = m1^2 - m2^2 > 0).
QuarticResiduals quartic_identity_check(const TransformCoefficients& coeffs,
                                        std::span<const PsiPair> samples);

}  // namespace puv
