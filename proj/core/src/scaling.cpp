// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/scaling.hpp"

#include <cmath>

#include "emx/errors.hpp"

namespace emx {

ScalingUnits compute_scaling(double x0_m, double n0_m3, double T0_kelvin,
                             double particle_mass_kg) {
  if (!(x0_m > 0.0) || !(n0_m3 > 0.0) || !(T0_kelvin > 0.0) || !(particle_mass_kg > 0.0))
    throw ConfigError("compute_scaling: all inputs must be positive");

  ScalingUnits s;
  s.x0 = x0_m;
  s.n0 = n0_m3;
  s.T0 = T0_kelvin;
  s.mass = particle_mass_kg;

  const double kT = phys::boltzmann * T0_kelvin;
  s.u0 = std::sqrt(kT / particle_mass_kg);
  s.t0 = x0_m / s.u0;
  s.p0 = n0_m3 * kT;
  s.E0 = kT / (phys::elementary_charge * x0_m);
  s.B0 = s.E0 / s.u0;
  s.rho0 = phys::elementary_charge * n0_m3;
  s.j0 = phys::elementary_charge * n0_m3 * s.u0;

  const double e2 = phys::elementary_charge * phys::elementary_charge;
  s.lambda = std::sqrt(phys::vacuum_permittivity * kT / (e2 * n0_m3 * x0_m * x0_m));
  s.alpha = s.lambda;
  s.beta = 1.0;
  return s;
}

}  // namespace emx
