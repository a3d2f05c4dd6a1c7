// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace emx {

namespace phys {
// CODATA 2018 values, SI units.
inline constexpr double elementary_charge = 1.602176634e-19;     // C
inline constexpr double boltzmann = 1.380649e-23;                // J/K
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double electron_mass = 9.1093837015e-31;        // kg
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
inline constexpr double kelvin_per_ev = elementary_charge / boltzmann;
}  // namespace phys

/// Reference units tying the dimensionless model to a physical configuration.
/// The velocity scale is thermal, u0 = sqrt(kB*T0/m), time follows from
/// t0 = x0/u0 and the field scales from e*E0*x0 = kB*T0 and B0 = E0/u0.
/// The three dimensionless groups collapse to (alpha, beta, lambda) with the
/// model choice alpha = lambda, beta = 1, so only the scaled Debye length
/// lambda survives in the equations.
struct ScalingUnits {
  // inputs
  double x0 = 1.0;    // m
  double n0 = 1.0;    // m^-3
  double T0 = 1.0;    // K
  double mass = 1.0;  // kg

  // derived reference units
  double u0 = 1.0;    // m/s
  double t0 = 1.0;    // s
  double p0 = 1.0;    // Pa
  double E0 = 1.0;    // V/m
  double B0 = 1.0;    // T
  double rho0 = 1.0;  // C/m^3
  double j0 = 1.0;    // A/m^2

  double lambda = 1.0;  // scaled Debye length
  double alpha = 1.0;   // = lambda by the model scaling choice
  double beta = 1.0;    // = 1 by the model scaling choice

  double to_dimensionless_length(double x_m) const { return x_m / x0; }
  double to_dimensionless_time(double t_s) const { return t_s / t0; }
  double to_dimensionless_velocity(double u) const { return u / u0; }
  double to_dimensionless_density(double n) const { return n / n0; }
  double to_dimensionless_efield(double e) const { return e / E0; }
  double to_dimensionless_bfield(double b) const { return b / B0; }
  double to_dimensionless_pressure(double p) const { return p / p0; }

  double to_physical_length(double x) const { return x * x0; }
  double to_physical_time(double t) const { return t * t0; }
  double to_physical_velocity(double u) const { return u * u0; }
  double to_physical_density(double n) const { return n * n0; }
  double to_physical_efield(double e) const { return e * E0; }
  double to_physical_bfield(double b) const { return b * B0; }
  double to_physical_pressure(double p) const { return p * p0; }
};

/// Builds the scaling from (x0 [m], n0 [m^-3], T0 [K], particle mass [kg]).
/// All inputs must be positive.
ScalingUnits compute_scaling(double x0_m, double n0_m3, double T0_kelvin, double particle_mass_kg);

}  // namespace emx
