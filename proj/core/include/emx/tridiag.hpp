// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace emx {

/// Tridiagonal system with an optional periodic (cyclic) closure. For
/// periodic systems sub[0] couples row 0 to the last unknown and sup[n-1]
/// couples the last row to the first unknown; otherwise those entries are
/// ignored.
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> sup;
  std::vector<double> rhs;
  bool periodic = false;

  std::size_t size() const { return diag.size(); }
};

/// Direct solve by Thomas elimination (Sherman-Morrison for the periodic
/// closure). No pivoting: callers must provide a diagonally dominant system,
/// as the E_y assemblies do. Throws NumericalError on a vanishing pivot.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

}  // namespace emx
