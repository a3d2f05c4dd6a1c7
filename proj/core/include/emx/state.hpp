// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace emx {

/// Conserved variables of one species, cell-centered: density n and momenta
/// q_x = n*u_x, q_y = n*u_y. Velocities are derived on demand so that vacuum
/// cells never store a 0/0.
struct FluidState {
  std::vector<double> n;
  std::vector<double> qx;
  std::vector<double> qy;

  std::size_t size() const { return n.size(); }
  bool consistent() const { return qx.size() == n.size() && qy.size() == n.size(); }

  static FluidState uniform(std::size_t n_cells, double n0, double ux0 = 0.0, double uy0 = 0.0);
};

/// Staggered electromagnetic field: E_x and B_z on the n_cells+1 interfaces,
/// E_y on the n_cells centers.
struct EMField {
  std::vector<double> ex;
  std::vector<double> bz;
  std::vector<double> ey;

  bool consistent(std::size_t n_cells) const {
    return ex.size() == n_cells + 1 && bz.size() == n_cells + 1 && ey.size() == n_cells;
  }

  static EMField zero(std::size_t n_cells);
};

/// Point value of one cell's conserved variables, used by the flux kernels.
struct CellState {
  double n = 0.0;
  double qx = 0.0;
  double qy = 0.0;

  double ux() const { return qx / n; }
  double uy() const { return qy / n; }
};

struct OneFluidSnapshot {
  FluidState fluid;
  EMField em;
  double t = 0.0;
  std::int64_t step = 0;
  std::vector<double> ey_prev;  // previous-step E_y, kept for the history-form solve

  std::size_t n_cells() const { return fluid.size(); }
};

struct TwoFluidSnapshot {
  FluidState ion;
  FluidState electron;
  EMField em;
  double t = 0.0;
  std::int64_t step = 0;
  std::vector<double> ey_prev;

  std::size_t n_cells() const { return ion.size(); }
};

}  // namespace emx
