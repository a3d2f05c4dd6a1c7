// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/pressure.hpp"

#include <cmath>
#include <stdexcept>

#include "emx/errors.hpp"

namespace emx {

PressureLaw PressureLaw::isothermal(double T) {
  if (!(T > 0.0)) throw ConfigError("PressureLaw: isothermal temperature must be positive");
  PressureLaw law;
  law.kind = PressureKind::Isothermal;
  law.T = T;
  return law;
}

PressureLaw PressureLaw::polytropic(double C, double gamma) {
  if (!(C > 0.0) || !(gamma > 0.0))
    throw ConfigError("PressureLaw: polytropic constants must be positive");
  PressureLaw law;
  law.kind = PressureKind::Polytropic;
  law.C = C;
  law.gamma = gamma;
  return law;
}

std::pair<double, double> PressureLaw::eval(double n) const {
  if (!(n > 0.0)) throw std::domain_error("PressureLaw: density must be positive");
  if (kind == PressureKind::Isothermal) return {T * n, T};
  const double p = C * std::pow(n, gamma);
  return {p, gamma * p / n};
}

double PressureLaw::sound_speed(double n) const { return std::sqrt(eval(n).second); }

double PressureLaw::linearization_temperature() const { return eval(1.0).second; }

std::pair<double, double> pressure_eval(const PressureLaw& law, double n) { return law.eval(n); }

double sound_speed(const PressureLaw& law, double n) { return law.sound_speed(n); }

}  // namespace emx
