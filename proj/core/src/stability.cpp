// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/stability.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "emx/errors.hpp"

namespace emx {

namespace {

using Poly = std::vector<double>;  // ascending coefficients

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void add_scaled(Poly& acc, const Poly& p, double w) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += w * p[i];
}

Poly shifted(const Poly& p, int k) {
  Poly out(p.size() + static_cast<std::size_t>(k), 0.0);
  std::copy(p.begin(), p.end(), out.begin() + k);
  return out;
}

Poly monomial(int k) {
  Poly out(static_cast<std::size_t>(k) + 1, 0.0);
  out.back() = 1.0;
  return out;
}

void check(const StabilityConfig& cfg) {
  if (!(cfg.h > 0.0) || !(cfg.delta > 0.0))
    throw ConfigError("stability: delta and h must be positive");
  if (cfg.gamma < 0.0) throw ConfigError("stability: gamma must be nonnegative");
  if ((cfg.a != 0 && cfg.a != 1) || (cfg.b != 0 && cfg.b != 1) || (cfg.c != 0 && cfg.c != 1))
    throw ConfigError("stability: implicitness flags must be 0 or 1");
}

}  // namespace

double RootSet::max_modulus() const {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, std::abs(r));
  return m;
}

std::vector<double> em_polynomial(const StabilityConfig& cfg) {
  check(cfg);
  const double lam2 = cfg.lambda * cfg.lambda;
  const double d2 = cfg.delta * cfg.delta;
  const double xi2 = cfg.xi * cfg.xi;
  const double visc = cfg.beta() * xi2 * cfg.delta;
  const Poly qm1{-1.0, 1.0};
  const Poly qv{visc - 1.0, 1.0};  // q - 1 + beta xi^2 delta

  Poly p;
  add_scaled(p, mul(mul(qm1, qm1), qv), lam2);
  add_scaled(p, shifted(qv, cfg.d()), d2 * xi2);
  add_scaled(p, shifted(qm1, cfg.a + 1), d2);
  return p;
}

std::vector<double> es_polynomial(const StabilityConfig& cfg) {
  check(cfg);
  const double lam2 = cfg.lambda * cfg.lambda;
  const double d2 = cfg.delta * cfg.delta;
  const double xi2 = cfg.xi * cfg.xi;
  const double visc = cfg.beta() * xi2 * cfg.delta;
  const Poly qm1{-1.0, 1.0};
  const Poly qv{visc - 1.0, 1.0};

  Poly p;
  add_scaled(p, mul(qm1, qv), lam2);
  add_scaled(p, monomial(cfg.a + 1), d2);
  add_scaled(p, monomial(cfg.a), cfg.T * d2 * lam2 * xi2);
  add_scaled(p, qv, cfg.beta() * cfg.delta * lam2 * xi2);
  return p;
}

RootSet polynomial_roots(std::span<const double> coeffs_ascending) {
  Poly c(coeffs_ascending.begin(), coeffs_ascending.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.empty()) throw std::invalid_argument("polynomial_roots: all coefficients are zero");

  RootSet out;
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return out;
  if (deg == 1) {
    out.roots.emplace_back(-c[0] / c[1], 0.0);
    return out;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg),
                                                    static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) =
        -c[i] / c[deg];

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("polynomial_roots: eigenvalue iteration failed");
  out.roots.reserve(deg);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out.roots.push_back(solver.eigenvalues()[i]);
  return out;
}

double max_growth_factor(int a, int b, int c, double lambda, double delta, double h, double gamma,
                         double T, std::size_t n_xi) {
  if (n_xi < 2) throw ConfigError("max_growth_factor: need at least two xi samples");
  StabilityConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.c = c;
  cfg.lambda = lambda;
  cfg.delta = delta;
  cfg.h = h;
  cfg.gamma = gamma;
  cfg.T = T;
  const double xi_max = std::numbers::pi / h;
  double growth = 0.0;
  for (std::size_t i = 0; i < n_xi; ++i) {
    cfg.xi = xi_max * static_cast<double>(i) / static_cast<double>(n_xi - 1);
    growth = std::max(growth, polynomial_roots(em_polynomial(cfg)).max_modulus());
    growth = std::max(growth, polynomial_roots(es_polynomial(cfg)).max_modulus());
  }
  return growth;
}

std::vector<StabilityRow> stability_region_scan(int a, int b, int c,
                                                std::span<const double> lambdas,
                                                std::span<const double> dt_over_h, double h,
                                                double gamma, double T, std::size_t n_xi) {
  std::vector<StabilityRow> rows;
  rows.reserve(lambdas.size() * dt_over_h.size());
  for (double lambda : lambdas) {
    for (double ratio : dt_over_h) {
      StabilityRow row;
      row.a = a;
      row.b = b;
      row.c = c;
      row.lambda = lambda;
      row.dt_over_h = ratio;
      row.max_growth = max_growth_factor(a, b, c, lambda, ratio * h, h, gamma, T, n_xi);
      row.stable = row.max_growth <= 1.0 + 1e-9;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_stability_csv(std::ostream& os, std::span<const StabilityRow> rows) {
  os << "a,b,c,lambda,dt_over_h,max_growth,stable\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%.17g,%.17g,%d\n", r.a, r.b, r.c, r.lambda,
                  r.dt_over_h, r.max_growth, r.stable ? 1 : 0);
    os << buf;
  }
}

double find_stable_dt_ratio(int a, int b, int c, std::span<const double> lambdas, double h,
                            double gamma, double T, std::size_t n_xi, double tol,
                            double growth_tol) {
  const auto stable = [&](double ratio) {
    for (double lambda : lambdas)
      if (max_growth_factor(a, b, c, lambda, ratio * h, h, gamma, T, n_xi) >
          1.0 + growth_tol)
        return false;
    return true;
  };

  double lo = 1e-3;
  int guard = 0;
  while (!stable(lo)) {
    lo *= 0.5;
    if (++guard > 40) throw NumericalError("find_stable_dt_ratio: no stable ratio found");
  }
  double hi = std::max(1.0, 4.0 * lo);
  guard = 0;
  while (stable(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 20) return lo;  // unconditionally stable in the probed range
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (stable(mid) ? lo : hi) = mid;
  }
  return lo;
}

DispersionModes dispersion_modes(double lambda, double T, double xi) {
  DispersionModes m;
  if (lambda == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    m.em_plus = {0.0, inf};
    m.em_minus = {0.0, -inf};
    m.es_plus = {0.0, inf};
    m.es_minus = {0.0, -inf};
    return m;
  }
  const double xi2 = xi * xi;
  const double em = std::sqrt(1.0 + xi2) / lambda;
  const double es = std::sqrt(1.0 + T * lambda * lambda * xi2) / lambda;
  m.em_plus = {0.0, em};
  m.em_minus = {0.0, -em};
  m.es_plus = {0.0, es};
  m.es_minus = {0.0, -es};
  return m;
}

}  // namespace emx
