// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "emx/config.hpp"
#include "emx/pressure.hpp"
#include "emx/state.hpp"

namespace emx {

enum class Species { Ion, Electron };

/// Numerical fluxes of (n, n*u_x, n*u_y) at one interface.
struct InterfaceFlux {
  double fn = 0.0;
  double fux = 0.0;
  double fuy = 0.0;
};

/// Local wave-speed estimate at an interface. nu_plus is the max of the
/// fastest characteristic taken over the interface-average state and the
/// right state; nu_minus the min of the slowest over the interface-average
/// state and the left state; mu = max(|nu_plus|, |nu_minus|).
struct WaveSpeedEstimate {
  double mu = 0.0;
  double nu_plus = 0.0;
  double nu_minus = 0.0;
};

/// Characteristic speeds u_x and u_x +- c_s of the isentropic system, with
/// the interface state formed by arithmetic averages of the conserved
/// variables. Throws NumericalError on non-finite input.
WaveSpeedEstimate wave_speed_mu(const CellState& left, const CellState& right,
                                const PressureLaw& law);

/// Electron variant of the eps^2-weighted system: speeds u_x +- c_s/eps.
WaveSpeedEstimate wave_speed_mu_electron(const CellState& left, const CellState& right,
                                         const PressureLaw& law, double epsilon2);

/// Local Lax-Friedrichs flux: central average plus mu-weighted dissipation on
/// the conserved variables.
InterfaceFlux llf_flux_onefluid(const CellState& left, const CellState& right, double mu,
                                const PressureLaw& law);

/// Two-fluid LLF flux. Ion fluxes match the one-fluid form; electron momentum
/// fluxes carry the eps^2 weights of the electron subsystem while the
/// dissipation stays unweighted.
InterfaceFlux llf_flux_twofluid(Species species, const CellState& left, const CellState& right,
                                double mu, const PressureLaw& law, double epsilon2);

/// Implicit part of the one-fluid mass flux at one interface: the explicit
/// flux corrected by the new electric field, the second x-momentum flux
/// difference, and the magnetic drift, all O(delta).
double implicit_mass_flux_onefluid(double fn_explicit, double ex_new, double n_left,
                                   double n_right, double qy_left, double qy_right, double bz,
                                   double fux_plus, double fux_minus, double delta, double h);

/// Two-fluid implicit mass flux; the ion electric correction enters with a
/// plus sign, the electron corrections carry 1/eps^2.
double implicit_mass_flux_twofluid(Species species, double fn_explicit, double ex_new,
                                   double n_left, double n_right, double qy_left, double qy_right,
                                   double bz, double fux_plus, double fux_minus, double delta,
                                   double h, double epsilon2);

/// Time step from the CFL rule: delta = cfl*h/mu_max for the AP scheme,
/// delta = cfl*h/max(mu_max, 1/lambda) for the classical scheme whose
/// explicit Maxwell update must resolve the scaled light speed 1/lambda.
/// Throws ConfigError for the classical scheme with lambda == 0.
double cfl_timestep(double mu_max, double h, double cfl, double lambda, SchemeKind kind);

enum class FluidBC;  // boundary.hpp

/// Largest interface wave-speed estimate over the grid, including the wrap
/// interface (periodic) or the edge-cell self pairs (Neumann).
double max_interface_wave_speed(const FluidState& state, const PressureLaw& law, FluidBC bc);
double max_interface_wave_speed_electron(const FluidState& state, const PressureLaw& law,
                                         double epsilon2, FluidBC bc);

}  // namespace emx
