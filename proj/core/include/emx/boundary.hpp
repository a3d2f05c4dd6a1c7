// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "emx/state.hpp"

namespace emx {

enum class FluidBC { Neumann, Periodic };
enum class EMBC { SilverMuller, Periodic, ZeroField };

/// Boundary drive for the POS runs: a linear ramp from 0 to `amplitude` over
/// `rise_time`, constant afterwards.
struct IncidentWave {
  double amplitude = 0.0;
  double rise_time = 1.0;
};

/// E_y^inc(t) = amplitude * min(t/rise_time, 1); t must be >= 0.
double incident_wave(double t, const IncidentWave& wave);

struct BoundaryConditionSpec {
  FluidBC fluid = FluidBC::Neumann;
  EMBC em = EMBC::ZeroField;
  IncidentWave incident{};
  /// Static transverse field the Silver-Muller condition is transparent
  /// about; the characteristic pinning acts on B_z - bz_background.
  double bz_background = 0.0;

  /// Throws ConfigError when only one of the fluid/EM sides is periodic.
  void validate() const;
};

/// Fluid arrays padded with two ghost cells per side. Neumann copies the
/// adjacent interior cell into both ghosts; periodic wraps.
struct PaddedFluid {
  std::vector<double> n;
  std::vector<double> qx;
  std::vector<double> qy;

  std::size_t n_cells() const { return n.size() - 4; }
};

PaddedFluid pad_fluid(const FluidState& state, FluidBC bc);

/// Ghost value of E_y expressed against the adjacent interior cell:
/// ghost = alpha + beta * edge.
struct EyGhostRelation {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Boundary closure of the transverse EM subsystem at one time level. For
/// Silver-Muller boundaries the incoming characteristic w = lambda*E_y +- B_z
/// (propagating at speed -+1/lambda) is pinned: on the left
/// lambda*E_y + (B_z - bg) = 2*lambda*incident(t), on the right
/// lambda*E_y - (B_z - bg) = 0, realized through the interface-midpoint
/// average of the ghost and edge cells. At lambda = 0 the characteristic
/// relations degenerate; the closure falls back to zero-gradient rows with
/// B_z frozen and reports it via lambda_zero_fallback.
struct EMClosure {
  bool periodic = false;
  bool lambda_zero_fallback = false;
  EyGhostRelation left;
  EyGhostRelation right;
};

EMClosure em_closure(const BoundaryConditionSpec& spec, double bz_left, double bz_right,
                     double lambda, double t);

/// E_y padded with one ghost per side from the closure (size n+2).
std::vector<double> pad_ey(std::span<const double> ey, const EMClosure& closure);

/// Zero-gradient ghosts for an interface array such as E_x (size n+3).
std::vector<double> pad_interface_zero_gradient(std::span<const double> values);

}  // namespace emx
