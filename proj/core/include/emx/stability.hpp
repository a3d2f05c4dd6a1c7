// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace emx {

/// Parameters of the linearized viscous semi-discretization at one Fourier
/// mode. beta = gamma*h models the mesh-proportional numerical viscosity of
/// the shock-capturing flux; admissible wave numbers satisfy |xi| <= pi/h.
struct StabilityConfig {
  int a = 1;
  int b = 1;
  int c = 1;
  double lambda = 1.0;
  double delta = 0.1;
  double h = 0.1;
  double gamma = 0.5;
  double T = 1.0;
  double xi = 0.0;

  double beta() const { return gamma * h; }
  int d() const { return b + c; }
};

/// Complex characteristic roots of one amplification polynomial at one wave
/// number. Real coefficients force the roots to be real or conjugate pairs.
struct RootSet {
  std::vector<std::complex<double>> roots;
  double max_modulus() const;
};

/// Coefficients (ascending powers of q) of the electromagnetic-mode
/// polynomial
///   P(q) = lambda^2 (q-1)^2 (q-1+beta xi^2 delta)
///        + q^d delta^2 xi^2 (q-1+beta xi^2 delta) + q^{a+1} delta^2 (q-1).
std::vector<double> em_polynomial(const StabilityConfig& cfg);

/// Electrostatic-mode polynomial
///   Q(q) = lambda^2 (q-1)(q-1+beta xi^2 delta) + q^{a+1} delta^2
///        + T delta^2 lambda^2 xi^2 q^a
///        + beta delta lambda^2 (q-1+beta xi^2 delta) xi^2.
std::vector<double> es_polynomial(const StabilityConfig& cfg);

/// All complex roots via companion-matrix eigenvalues after stripping zero
/// leading coefficients. Throws std::invalid_argument for the all-zero
/// polynomial.
RootSet polynomial_roots(std::span<const double> coeffs_ascending);

/// Largest root modulus of both polynomials over a uniform scan of
/// n_xi wave numbers on [0, pi/h] (the negative half follows by symmetry).
double max_growth_factor(int a, int b, int c, double lambda, double delta, double h, double gamma,
                         double T, std::size_t n_xi = 2049);

struct StabilityRow {
  int a = 0;
  int b = 0;
  int c = 0;
  double lambda = 0.0;
  double dt_over_h = 0.0;
  double max_growth = 0.0;
  bool stable = false;
};

std::vector<StabilityRow> stability_region_scan(int a, int b, int c,
                                                std::span<const double> lambdas,
                                                std::span<const double> dt_over_h, double h,
                                                double gamma, double T, std::size_t n_xi = 2049);

/// CSV with columns a,b,c,lambda,dt_over_h,max_growth,stable.
void write_stability_csv(std::ostream& os, std::span<const StabilityRow> rows);

/// Bisection for the largest certified-stable dt/h ratio common to all the
/// given lambdas, refined to `tol` in dt/h. Returns the stable bracket end.
double find_stable_dt_ratio(int a, int b, int c, std::span<const double> lambdas, double h,
                            double gamma, double T, std::size_t n_xi = 2049, double tol = 1e-3,
                            double growth_tol = 1e-9);

/// Continuous dispersion frequencies of the linearized model:
/// s_em = +-(i/lambda) sqrt(1+xi^2), s_es = +-(i/lambda) sqrt(1+T lambda^2
/// xi^2). lambda = 0 reports infinite frequencies.
struct DispersionModes {
  std::complex<double> em_plus;
  std::complex<double> em_minus;
  std::complex<double> es_plus;
  std::complex<double> es_minus;
};

DispersionModes dispersion_modes(double lambda, double T, double xi);

}  // namespace emx
