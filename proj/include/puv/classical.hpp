#pragma once

#include <iosfwd>
#include <vector>

#include "puv/pais_uhlenbeck.hpp"

namespace puv {

struct TrajectorySpec {
  double duration = 10.0;
  double step = 1e-3;
  Jet initial;

  void validate() const;  // duration > 0, step <= duration / 100
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Jet> jets;
  std::vector<cdouble> xi1, xi2, p1, p2;  // filled by map_to_xi
  bool has_xi = false;
};

// Classic fixed-step RK4 on (x, x', x'', x''') for
// x'''' + (w1^2 + w2^2) x'' + w1^2 w2^2 x = 0.
Trajectory integrate_pu(const PUParams& params, const TrajectorySpec& spec);

// Mode superposition A e^{i w1 t} + B e^{-i w1 t} + C e^{i w2 t} + D e^{-i w2 t}
// with amplitudes solved from the initial jet.
cdouble analytic_solution(const PUParams& params, const Jet& initial, double t);
Jet analytic_jet(const PUParams& params, const Jet& initial, double t);

// xi1 = i(a x + b x''), xi2 = c x + b x''; P_i from (x', x''').
void map_to_xi(const TransformCoefficients& coeffs, Trajectory& trajectory);

// x = b (xi2 + i xi1), x'' = (xi2 - c x)/b, and the same for (x', x''').
Jet invert_xi(const TransformCoefficients& coeffs, cdouble xi1, cdouble xi2,
              cdouble p1, cdouble p2);

cdouble h_xi_value(const PUParams& params, cdouble xi1, cdouble xi2, cdouble p1,
                   cdouble p2);
cdouble h_pu_value(const PUParams& params, const Jet& jet);

struct EnergyCheck {
  double drift;              // max |H_xi(t) - H_xi(0)|
  double equality_residual;  // max |H_PU - H_xi| along the trajectory
};

EnergyCheck energy_check(const PUParams& params, const TransformCoefficients& coeffs,
                         const Trajectory& trajectory);

// Columns: t, Re/Im of x, x', x'', x''', xi1, xi2, P1, P2, H_xi, H_PU.
void write_trajectory_csv(const PUParams& params, const TransformCoefficients& coeffs,
                          const Trajectory& trajectory, std::ostream& out);

}  // namespace puv
