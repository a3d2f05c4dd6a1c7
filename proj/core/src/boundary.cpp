// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/boundary.hpp"

#include <algorithm>
#include <stdexcept>

#include "emx/errors.hpp"

namespace emx {

double incident_wave(double t, const IncidentWave& wave) {
  if (t < 0.0) throw std::domain_error("incident_wave: t must be nonnegative");
  if (wave.rise_time <= 0.0) return wave.amplitude;
  return wave.amplitude * std::min(t / wave.rise_time, 1.0);
}

void BoundaryConditionSpec::validate() const {
  const bool fluid_periodic = fluid == FluidBC::Periodic;
  const bool em_periodic = em == EMBC::Periodic;
  if (fluid_periodic != em_periodic)
    throw ConfigError("BoundaryConditionSpec: periodic applies to both the fluid and EM sides "
                      "or to neither");
}

PaddedFluid pad_fluid(const FluidState& state, FluidBC bc) {
  const std::size_t n = state.size();
  if (n == 0 || !state.consistent())
    throw std::invalid_argument("pad_fluid: inconsistent fluid state");
  PaddedFluid p;
  const auto fill = [&](const std::vector<double>& src, std::vector<double>& dst) {
    dst.resize(n + 4);
    std::copy(src.begin(), src.end(), dst.begin() + 2);
    if (bc == FluidBC::Periodic) {
      dst[0] = src[(n >= 2) ? n - 2 : 0];
      dst[1] = src[n - 1];
      dst[n + 2] = src[0];
      dst[n + 3] = src[(n >= 2) ? 1 : 0];
    } else {
      dst[0] = dst[1] = src[0];
      dst[n + 2] = dst[n + 3] = src[n - 1];
    }
  };
  fill(state.n, p.n);
  fill(state.qx, p.qx);
  fill(state.qy, p.qy);
  return p;
}

EMClosure em_closure(const BoundaryConditionSpec& spec, double bz_left, double bz_right,
                     double lambda, double t) {
  spec.validate();
  EMClosure c;
  switch (spec.em) {
    case EMBC::Periodic:
      c.periodic = true;
      return c;
    case EMBC::ZeroField:
      c.left = {0.0, 0.0};
      c.right = {0.0, 0.0};
      return c;
    case EMBC::SilverMuller:
      break;
  }
  if (lambda <= 0.0) {
    c.left = {0.0, 1.0};
    c.right = {0.0, 1.0};
    c.lambda_zero_fallback = true;
    return c;
  }
  const double inc = incident_wave(t, spec.incident);
  c.left = {4.0 * inc - 2.0 * (bz_left - spec.bz_background) / lambda, -1.0};
  c.right = {2.0 * (bz_right - spec.bz_background) / lambda, -1.0};
  return c;
}

std::vector<double> pad_ey(std::span<const double> ey, const EMClosure& closure) {
  const std::size_t n = ey.size();
  if (n == 0) throw std::invalid_argument("pad_ey: empty E_y array");
  std::vector<double> out(n + 2);
  std::copy(ey.begin(), ey.end(), out.begin() + 1);
  if (closure.periodic) {
    out[0] = ey[n - 1];
    out[n + 1] = ey[0];
  } else {
    out[0] = closure.left.alpha + closure.left.beta * ey[0];
    out[n + 1] = closure.right.alpha + closure.right.beta * ey[n - 1];
  }
  return out;
}

std::vector<double> pad_interface_zero_gradient(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("pad_interface_zero_gradient: empty array");
  std::vector<double> out(n + 2);
  std::copy(values.begin(), values.end(), out.begin() + 1);
  out[0] = values[0];
  out[n + 1] = values[n - 1];
  return out;
}

}  // namespace emx
