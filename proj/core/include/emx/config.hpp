// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "emx/errors.hpp"
#include "emx/pressure.hpp"

namespace emx {

enum class SchemeKind { Classical, AsymptoticPreserving };

/// Time-implicitness triple (a, b, c) plus the physical and numerical
/// parameters shared by the PDE schemes. Full PDE runs admit only the
/// classical (0,0,1) and AP (1,1,1) triples; the other levels exist at the
/// characteristic-polynomial level in the stability lab.
struct SchemeConfig {
  int a = 1;
  int b = 1;
  int c = 1;
  double lambda = 1.0;    // scaled Debye length, >= 0 (0 only for the AP scheme)
  double epsilon2 = 1.0;  // electron/ion mass ratio (two-fluid only)
  PressureLaw pressure{};
  double cfl = 0.5;
  double density_floor = 1e-8;
  bool ey_history_form = false;  // use the two-level history form of the E_y solve

  static SchemeConfig classical(double lambda) {
    SchemeConfig cfg;
    cfg.a = 0;
    cfg.b = 0;
    cfg.c = 1;
    cfg.lambda = lambda;
    return cfg;
  }

  static SchemeConfig ap(double lambda) {
    SchemeConfig cfg;
    cfg.lambda = lambda;
    return cfg;
  }

  SchemeKind kind() const {
    return a == 1 ? SchemeKind::AsymptoticPreserving : SchemeKind::Classical;
  }

  /// Throws ConfigError on an inadmissible combination.
  void validate() const {
    const bool classical_triple = a == 0 && b == 0 && c == 1;
    const bool ap_triple = a == 1 && b == 1 && c == 1;
    if (!classical_triple && !ap_triple)
      throw ConfigError("SchemeConfig: PDE runs admit only the (0,0,1) and (1,1,1) triples");
    if (lambda < 0.0) throw ConfigError("SchemeConfig: lambda must be nonnegative");
    if (lambda == 0.0 && a != 1)
      throw ConfigError("SchemeConfig: lambda = 0 is legal only for the AP scheme");
    if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("SchemeConfig: cfl must lie in (0, 1]");
    if (!(epsilon2 > 0.0)) throw ConfigError("SchemeConfig: epsilon2 must be positive");
    if (!(density_floor > 0.0)) throw ConfigError("SchemeConfig: density floor must be positive");
  }
};

}  // namespace emx
