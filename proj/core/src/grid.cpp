// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/grid.hpp"

#include "emx/errors.hpp"

namespace emx {

Grid1D::Grid1D(double x_min_, double x_max_, std::size_t n_cells_)
    : x_min(x_min_), x_max(x_max_), n_cells(n_cells_) {
  if (n_cells == 0) throw ConfigError("Grid1D: n_cells must be positive");
  if (!(x_max > x_min)) throw ConfigError("Grid1D: x_max must exceed x_min");
}

std::vector<double> Grid1D::centers() const {
  std::vector<double> out(n_cells);
  for (std::size_t k = 0; k < n_cells; ++k) out[k] = center(k);
  return out;
}

std::vector<double> Grid1D::interfaces() const {
  std::vector<double> out(n_cells + 1);
  for (std::size_t i = 0; i <= n_cells; ++i) out[i] = interface(i);
  return out;
}

}  // namespace emx
