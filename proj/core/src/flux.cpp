// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/flux.hpp"

#include <algorithm>
#include <cmath>

#include "emx/boundary.hpp"
#include "emx/errors.hpp"

namespace emx {

namespace {

bool finite(const CellState& s) {
  return std::isfinite(s.n) && std::isfinite(s.qx) && std::isfinite(s.qy);
}

WaveSpeedEstimate wave_speed_impl(const CellState& left, const CellState& right,
                                  const PressureLaw& law, double speed_scale) {
  if (!finite(left) || !finite(right))
    throw NumericalError("wave_speed_mu: non-finite input state");
  const CellState mid{0.5 * (left.n + right.n), 0.5 * (left.qx + right.qx),
                      0.5 * (left.qy + right.qy)};
  const auto fastest = [&](const CellState& s) {
    return s.ux() + law.sound_speed(s.n) * speed_scale;
  };
  const auto slowest = [&](const CellState& s) {
    return s.ux() - law.sound_speed(s.n) * speed_scale;
  };
  WaveSpeedEstimate w;
  w.nu_plus = std::max(fastest(mid), fastest(right));
  w.nu_minus = std::min(slowest(mid), slowest(left));
  w.mu = std::max(std::abs(w.nu_plus), std::abs(w.nu_minus));
  return w;
}

}  // namespace

WaveSpeedEstimate wave_speed_mu(const CellState& left, const CellState& right,
                                const PressureLaw& law) {
  return wave_speed_impl(left, right, law, 1.0);
}

WaveSpeedEstimate wave_speed_mu_electron(const CellState& left, const CellState& right,
                                         const PressureLaw& law, double epsilon2) {
  if (!(epsilon2 > 0.0)) throw ConfigError("wave_speed_mu_electron: epsilon2 must be positive");
  return wave_speed_impl(left, right, law, 1.0 / std::sqrt(epsilon2));
}

InterfaceFlux llf_flux_onefluid(const CellState& l, const CellState& r, double mu,
                                const PressureLaw& law) {
  InterfaceFlux f;
  f.fn = 0.5 * (l.qx + r.qx + mu * (l.n - r.n));
  f.fux = 0.5 * (l.qx * l.ux() + law.eval(l.n).first + r.qx * r.ux() + law.eval(r.n).first +
                 mu * (l.qx - r.qx));
  f.fuy = 0.5 * (l.qx * l.uy() + r.qx * r.uy() + mu * (l.qy - r.qy));
  return f;
}

InterfaceFlux llf_flux_twofluid(Species species, const CellState& l, const CellState& r,
                                double mu, const PressureLaw& law, double epsilon2) {
  if (species == Species::Ion) return llf_flux_onefluid(l, r, mu, law);
  InterfaceFlux f;
  f.fn = 0.5 * (l.qx + r.qx + mu * (l.n - r.n));
  f.fux = 0.5 * (epsilon2 * l.qx * l.ux() + law.eval(l.n).first + epsilon2 * r.qx * r.ux() +
                 law.eval(r.n).first + mu * (l.qx - r.qx));
  f.fuy = 0.5 * (epsilon2 * (l.qx * l.uy() + r.qx * r.uy()) + mu * (l.qy - r.qy));
  return f;
}

double implicit_mass_flux_onefluid(double fn_explicit, double ex_new, double n_left,
                                   double n_right, double qy_left, double qy_right, double bz,
                                   double fux_plus, double fux_minus, double delta, double h) {
  return fn_explicit - 0.5 * delta * (n_left + n_right) * ex_new -
         0.5 * delta / h * (fux_plus - fux_minus) - 0.5 * delta * (qy_left + qy_right) * bz;
}

double implicit_mass_flux_twofluid(Species species, double fn_explicit, double ex_new,
                                   double n_left, double n_right, double qy_left, double qy_right,
                                   double bz, double fux_plus, double fux_minus, double delta,
                                   double h, double epsilon2) {
  if (species == Species::Ion) {
    return fn_explicit + 0.5 * delta * (n_left + n_right) * ex_new -
           0.5 * delta / h * (fux_plus - fux_minus) + 0.5 * delta * (qy_left + qy_right) * bz;
  }
  const double w = delta / (2.0 * epsilon2);
  return fn_explicit - w * (n_left + n_right) * ex_new - w / h * (fux_plus - fux_minus) -
         w * (qy_left + qy_right) * bz;
}

double cfl_timestep(double mu_max, double h, double cfl, double lambda, SchemeKind kind) {
  if (!std::isfinite(mu_max) || mu_max < 0.0)
    throw NumericalError("cfl_timestep: invalid wave speed");
  double denom = mu_max;
  if (kind == SchemeKind::Classical) {
    if (!(lambda > 0.0))
      throw ConfigError("cfl_timestep: the classical scheme needs lambda > 0 "
                        "(the scaled light speed 1/lambda is infinite)");
    denom = std::max(denom, 1.0 / lambda);
  }
  if (denom == 0.0) throw NumericalError("cfl_timestep: zero wave speed");
  return cfl * h / denom;
}

namespace {

double max_speed_impl(const FluidState& s, const PressureLaw& law, FluidBC bc,
                      double speed_scale) {
  const std::size_t n = s.size();
  const auto cell = [&](std::size_t k) { return CellState{s.n[k], s.qx[k], s.qy[k]}; };
  double mu = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k)
    mu = std::max(mu, wave_speed_impl(cell(k), cell(k + 1), law, speed_scale).mu);
  if (bc == FluidBC::Periodic) {
    mu = std::max(mu, wave_speed_impl(cell(n - 1), cell(0), law, speed_scale).mu);
  } else {
    mu = std::max(mu, wave_speed_impl(cell(0), cell(0), law, speed_scale).mu);
    mu = std::max(mu, wave_speed_impl(cell(n - 1), cell(n - 1), law, speed_scale).mu);
  }
  return mu;
}

}  // namespace

double max_interface_wave_speed(const FluidState& state, const PressureLaw& law, FluidBC bc) {
  return max_speed_impl(state, law, bc, 1.0);
}

double max_interface_wave_speed_electron(const FluidState& state, const PressureLaw& law,
                                         double epsilon2, FluidBC bc) {
  if (!(epsilon2 > 0.0))
    throw ConfigError("max_interface_wave_speed_electron: epsilon2 must be positive");
  return max_speed_impl(state, law, bc, 1.0 / std::sqrt(epsilon2));
}

}  // namespace emx
