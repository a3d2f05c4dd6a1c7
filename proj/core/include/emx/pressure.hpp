// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

namespace emx {

enum class PressureKind { Isothermal, Polytropic };

/// Barotropic pressure closure: p(n) = T*n (isothermal) or p(n) = C*n^gamma
/// (polytropic). Both are strictly increasing for n > 0, which keeps the
/// hydrodynamic subsystem hyperbolic.
struct PressureLaw {
  PressureKind kind = PressureKind::Isothermal;
  double T = 1.0;
  double C = 1.0;
  double gamma = 5.0 / 3.0;

  static PressureLaw isothermal(double T);
  static PressureLaw polytropic(double C, double gamma);

  /// p(n) and p'(n); throws std::domain_error for n <= 0.
  std::pair<double, double> eval(double n) const;

  /// c_s = sqrt(p'(n)).
  double sound_speed(double n) const;

  /// p'(1), the temperature entering the linearized analysis.
  double linearization_temperature() const;
};

std::pair<double, double> pressure_eval(const PressureLaw& law, double n);
double sound_speed(const PressureLaw& law, double n);

}  // namespace emx
