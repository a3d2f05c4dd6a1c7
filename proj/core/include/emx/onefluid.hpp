// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "emx/boundary.hpp"
#include "emx/config.hpp"
#include "emx/state.hpp"
#include "emx/tridiag.hpp"

namespace emx {

/// Integrates the discrete Gauss law from the left: E_x|_{k+1/2} =
/// E_x|_{k-1/2} + h/lambda^2 * (1 - n_k), anchored at `left_value`. For
/// lambda = 0 the data must be neutral (n == 1) and the anchor is returned
/// everywhere; otherwise a ConfigError is thrown.
std::vector<double> init_ex_from_gauss(const FluidState& fluid, double lambda, double h,
                                       double left_value);

/// Direct solve of an assembled E_y system; requires a positive main
/// diagonal.
std::vector<double> solve_ey_elliptic(const TridiagonalSystem& system);

/// One time step of the classical (0,0,1) scheme: explicit mass flux,
/// Faraday with the old E_y, both Ampere updates (the y one with the new
/// B_z), then the momenta against the new electric field. Requires
/// lambda > 0.
OneFluidSnapshot step_classical(const OneFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                                const BoundaryConditionSpec& bc, double h);

/// One time step of the AP (1,1,1) scheme: solve the elliptic E_y system,
/// evaluate E_x pointwise, advance B_z with the new E_y, then the momenta
/// (explicit density in the Lorentz force) and finally the density with the
/// implicit mass flux. Valid for every lambda >= 0.
OneFluidSnapshot step_ap(const OneFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                         const BoundaryConditionSpec& bc, double h);

}  // namespace emx
