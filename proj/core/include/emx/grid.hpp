// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace emx {

/// Uniform 1D finite-volume grid. Fluid quantities and E_y live on cell
/// centers, E_x and B_z on the n_cells+1 interfaces. Centers and interfaces
/// interleave exactly: interface(k+1) - center(k) = h/2.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n_cells = 1;

  Grid1D() = default;
  Grid1D(double x_min, double x_max, std::size_t n_cells);

  double h() const { return (x_max - x_min) / static_cast<double>(n_cells); }
  double center(std::size_t k) const { return x_min + (static_cast<double>(k) + 0.5) * h(); }
  double interface(std::size_t i) const { return x_min + static_cast<double>(i) * h(); }

  std::vector<double> centers() const;
  std::vector<double> interfaces() const;
};

}  // namespace emx
