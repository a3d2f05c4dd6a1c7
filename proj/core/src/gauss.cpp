// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/gauss.hpp"

#include <stdexcept>

namespace emx {

FluidState FluidState::uniform(std::size_t n_cells, double n0, double ux0, double uy0) {
  FluidState s;
  s.n.assign(n_cells, n0);
  s.qx.assign(n_cells, n0 * ux0);
  s.qy.assign(n_cells, n0 * uy0);
  return s;
}

EMField EMField::zero(std::size_t n_cells) {
  EMField f;
  f.ex.assign(n_cells + 1, 0.0);
  f.bz.assign(n_cells + 1, 0.0);
  f.ey.assign(n_cells, 0.0);
  return f;
}

std::vector<double> gauss_residual(const FluidState& fluid, const EMField& em, double lambda,
                                   double h) {
  const std::size_t n = fluid.size();
  if (em.ex.size() != n + 1)
    throw std::invalid_argument("gauss_residual: E_x must have n_cells+1 entries");
  const double l2h = lambda * lambda / h;
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k)
    r[k] = l2h * (em.ex[k + 1] - em.ex[k]) - (1.0 - fluid.n[k]);
  return r;
}

std::vector<double> gauss_residual(const FluidState& ion, const FluidState& electron,
                                   const EMField& em, double lambda, double h) {
  const std::size_t n = ion.size();
  if (electron.size() != n)
    throw std::invalid_argument("gauss_residual: species sizes differ");
  if (em.ex.size() != n + 1)
    throw std::invalid_argument("gauss_residual: E_x must have n_cells+1 entries");
  const double l2h = lambda * lambda / h;
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k)
    r[k] = l2h * (em.ex[k + 1] - em.ex[k]) - (ion.n[k] - electron.n[k]);
  return r;
}

std::vector<double> face_average(std::span<const double> interface_values) {
  if (interface_values.size() < 2)
    throw std::invalid_argument("face_average: need at least two interface values");
  std::vector<double> out(interface_values.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = 0.5 * (interface_values[k] + interface_values[k + 1]);
  return out;
}

std::vector<double> interface_midpoints(std::span<const double> center_values) {
  if (center_values.size() < 2)
    throw std::invalid_argument("interface_midpoints: need at least two center values");
  std::vector<double> out(center_values.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = 0.5 * (center_values[i] + center_values[i + 1]);
  return out;
}

}  // namespace emx
