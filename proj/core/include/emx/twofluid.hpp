// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "emx/boundary.hpp"
#include "emx/config.hpp"
#include "emx/state.hpp"

namespace emx {

/// Classical (0,0,1) two-fluid step. The Ampere-x update uses the difference
/// of the species mass fluxes so the two-species Gauss law is conserved
/// exactly; the ion Lorentz force enters with a plus sign, the electron one
/// with a minus sign and the electron momentum update divides by eps^2.
TwoFluidSnapshot step_classical(const TwoFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                                const BoundaryConditionSpec& bc, double h);

/// AP (1,1,1) two-fluid step: elliptic E_y solve with the
/// lambda^2 + delta^2*(n_i + n_e/eps^2) diagonal, pointwise E_x, Faraday,
/// momenta, then both densities from the implicit mass fluxes.
TwoFluidSnapshot step_ap(const TwoFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                         const BoundaryConditionSpec& bc, double h);

}  // namespace emx
