// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "emx/boundary.hpp"
#include "emx/flux.hpp"
#include "emx/pressure.hpp"

namespace emx::detail {

// Explicit LLF fluxes on the extended interfaces i = -1..n+1 of a padded
// state; entry j corresponds to interface i = j-1, between padded cells j and
// j+1. Interior interface i maps to j = i+1, and the flux difference across
// cell k is f[k+2] - f[k+1].
struct FluxTable {
  std::vector<double> fn;
  std::vector<double> fux;
  std::vector<double> fuy;
  std::vector<double> mu;
};

inline FluxTable flux_table(const PaddedFluid& p, const PressureLaw& law, Species species,
                            double epsilon2) {
  const std::size_t m = p.n.size() - 1;  // number of extended interfaces
  FluxTable t;
  t.fn.resize(m);
  t.fux.resize(m);
  t.fuy.resize(m);
  t.mu.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const CellState l{p.n[j], p.qx[j], p.qy[j]};
    const CellState r{p.n[j + 1], p.qx[j + 1], p.qy[j + 1]};
    const WaveSpeedEstimate w = (species == Species::Electron)
                                    ? wave_speed_mu_electron(l, r, law, epsilon2)
                                    : wave_speed_mu(l, r, law);
    const InterfaceFlux f = (species == Species::Electron)
                                ? llf_flux_twofluid(Species::Electron, l, r, w.mu, law, epsilon2)
                                : llf_flux_onefluid(l, r, w.mu, law);
    t.mu[j] = w.mu;
    t.fn[j] = f.fn;
    t.fux[j] = f.fux;
    t.fuy[j] = f.fuy;
  }
  return t;
}

// Density floor: a cell at or below the floor is vacuum and carries no
// momentum.
inline void apply_floor(FluidState& f, double floor) {
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f.n[k] <= floor) {
      f.n[k] = floor;
      f.qx[k] = 0.0;
      f.qy[k] = 0.0;
    }
  }
}

}  // namespace emx::detail
