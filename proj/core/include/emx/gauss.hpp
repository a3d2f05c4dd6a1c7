// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "emx/state.hpp"

namespace emx {

/// One-fluid discrete Gauss-law residual against the uniform neutralizing
/// background: r_k = lambda^2/h * (E_x|_{k+1/2} - E_x|_{k-1/2}) - (1 - n_k).
/// Linear in (E_x, n); identically zero for consistent initial data.
std::vector<double> gauss_residual(const FluidState& fluid, const EMField& em, double lambda,
                                   double h);

/// Two-fluid variant: r_k = lambda^2/h * dE_x - (n_i - n_e).
std::vector<double> gauss_residual(const FluidState& ion, const FluidState& electron,
                                   const EMField& em, double lambda, double h);

/// Midpoint average of an interface array onto the cells it brackets:
/// out_k = (v_{k+1/2} + v_{k-1/2}) / 2. Input size n+1, output size n.
std::vector<double> face_average(std::span<const double> interface_values);

/// Midpoint values of a center array on the interior interfaces:
/// out_i = (c_i + c_{i+1}) / 2. Input size n, output size n-1.
std::vector<double> interface_midpoints(std::span<const double> center_values);

}  // namespace emx
