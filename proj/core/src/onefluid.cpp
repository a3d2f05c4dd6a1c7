// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/onefluid.hpp"

#include <cmath>
#include <stdexcept>

#include "emx/errors.hpp"
#include "emx/tridiag.hpp"
#include "scheme_detail.hpp"

namespace emx {

namespace {

void check_snapshot(const OneFluidSnapshot& s) {
  if (!s.fluid.consistent() || s.fluid.size() == 0)
    throw std::invalid_argument("one-fluid step: inconsistent fluid arrays");
  if (!s.em.consistent(s.fluid.size()))
    throw std::invalid_argument("one-fluid step: inconsistent EM arrays");
}

}  // namespace

std::vector<double> init_ex_from_gauss(const FluidState& fluid, double lambda, double h,
                                       double left_value) {
  const std::size_t n = fluid.size();
  std::vector<double> ex(n + 1);
  ex[0] = left_value;
  if (lambda == 0.0) {
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(fluid.n[k] - 1.0) > 1e-14)
        throw ConfigError("init_ex_from_gauss: lambda = 0 requires neutral data (n == 1)");
      ex[k + 1] = left_value;
    }
    return ex;
  }
  const double scale = h / (lambda * lambda);
  for (std::size_t k = 0; k < n; ++k) ex[k + 1] = ex[k] + scale * (1.0 - fluid.n[k]);
  return ex;
}

std::vector<double> solve_ey_elliptic(const TridiagonalSystem& system) {
  for (double d : system.diag)
    if (!(d > 0.0)) throw NumericalError("solve_ey_elliptic: non-positive main diagonal");
  return solve_tridiagonal(system);
}

OneFluidSnapshot step_classical(const OneFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                                const BoundaryConditionSpec& bc, double h) {
  cfg.validate();
  bc.validate();
  check_snapshot(s);
  if (cfg.kind() != SchemeKind::Classical)
    throw ConfigError("step_classical: config is not the (0,0,1) triple");
  if (!(cfg.lambda > 0.0))
    throw ConfigError("step_classical: lambda = 0 does not yield a valid recursion");

  const std::size_t n = s.n_cells();
  const double lam2 = cfg.lambda * cfg.lambda;
  const PaddedFluid p = pad_fluid(s.fluid, bc.fluid);
  const detail::FluxTable f = detail::flux_table(p, cfg.pressure, Species::Ion, 1.0);

  OneFluidSnapshot out;
  out.t = s.t + delta;
  out.step = s.step + 1;
  out.ey_prev = s.em.ey;

  // mass, explicit flux
  out.fluid.n.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.fluid.n[k] = s.fluid.n[k] - delta / h * (f.fn[k + 2] - f.fn[k + 1]);

  // Faraday with the old E_y (b = 0)
  const EMClosure closure = em_closure(bc, s.em.bz.front(), s.em.bz.back(), cfg.lambda, s.t);
  const std::vector<double> eyp = pad_ey(s.em.ey, closure);
  out.em.bz.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.bz[i] = s.em.bz[i] - delta / h * (eyp[i + 1] - eyp[i]);

  // Ampere-x with the explicit mass flux (a = 0); sharing the flux values
  // with the density update keeps the discrete Gauss law telescoping.
  out.em.ex.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.ex[i] = s.em.ex[i] + delta / lam2 * f.fn[i + 1];

  // Ampere-y with the new B_z (c = 1)
  out.em.ey.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.em.ey[k] =
        s.em.ey[k] + delta / lam2 * (s.fluid.qy[k] - (out.em.bz[k + 1] - out.em.bz[k]) / h);

  // momenta against the new electric field, new density (a = 0)
  out.fluid.qx.resize(n);
  out.fluid.qy.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ex_tilde = 0.5 * (out.em.ex[k + 1] + out.em.ex[k]);
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    out.fluid.qx[k] = s.fluid.qx[k] - delta / h * (f.fux[k + 2] - f.fux[k + 1]) -
                      delta * (out.fluid.n[k] * ex_tilde + s.fluid.qy[k] * bz_tilde);
    out.fluid.qy[k] = s.fluid.qy[k] - delta / h * (f.fuy[k + 2] - f.fuy[k + 1]) -
                      delta * (out.fluid.n[k] * out.em.ey[k] - s.fluid.qx[k] * bz_tilde);
  }

  detail::apply_floor(out.fluid, cfg.density_floor);
  return out;
}

OneFluidSnapshot step_ap(const OneFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                         const BoundaryConditionSpec& bc, double h) {
  cfg.validate();
  bc.validate();
  check_snapshot(s);
  if (cfg.kind() != SchemeKind::AsymptoticPreserving)
    throw ConfigError("step_ap: config is not the (1,1,1) triple");

  const std::size_t n = s.n_cells();
  const double lam2 = cfg.lambda * cfg.lambda;
  const double d2 = delta * delta;
  const double sc = d2 / (h * h);
  const PaddedFluid p = pad_fluid(s.fluid, bc.fluid);
  const detail::FluxTable f = detail::flux_table(p, cfg.pressure, Species::Ion, 1.0);

  OneFluidSnapshot out;
  out.t = s.t + delta;
  out.step = s.step + 1;
  out.ey_prev = s.em.ey;

  // discrete elliptic system for E_y^{m+1}
  const EMClosure closure =
      em_closure(bc, s.em.bz.front(), s.em.bz.back(), cfg.lambda, s.t + delta);
  TridiagonalSystem sys;
  sys.sub.assign(n, -sc);
  sys.sup.assign(n, -sc);
  sys.diag.resize(n);
  sys.rhs.resize(n);
  sys.periodic = closure.periodic;
  const bool history = cfg.ey_history_form && s.ey_prev.size() == n;
  for (std::size_t k = 0; k < n; ++k) {
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    sys.diag[k] = lam2 + d2 * s.fluid.n[k] + 2.0 * sc;
    if (history) {
      sys.rhs[k] = lam2 * (2.0 * s.em.ey[k] - s.ey_prev[k]) -
                   d2 / h * (f.fuy[k + 2] - f.fuy[k + 1]) + d2 * s.fluid.qx[k] * bz_tilde;
    } else {
      sys.rhs[k] = lam2 * s.em.ey[k] + delta * s.fluid.qy[k] -
                   delta / h * (s.em.bz[k + 1] - s.em.bz[k]) -
                   d2 / h * (f.fuy[k + 2] - f.fuy[k + 1]) + d2 * s.fluid.qx[k] * bz_tilde;
    }
  }
  if (!sys.periodic) {
    sys.diag[0] -= sc * closure.left.beta;
    sys.rhs[0] += sc * closure.left.alpha;
    sys.diag[n - 1] -= sc * closure.right.beta;
    sys.rhs[n - 1] += sc * closure.right.alpha;
  }
  out.em.ey = solve_ey_elliptic(sys);

  // pointwise E_x^{m+1}
  out.em.ex.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double n_sum = p.n[i + 1] + p.n[i + 2];
    const double qy_sum = p.qy[i + 1] + p.qy[i + 2];
    const double a = lam2 + 0.5 * d2 * n_sum;
    out.em.ex[i] = (lam2 * s.em.ex[i] + delta * f.fn[i + 1] -
                    0.5 * d2 / h * (f.fux[i + 2] - f.fux[i]) -
                    0.5 * d2 * qy_sum * s.em.bz[i]) / a;
  }

  // Faraday with E_y^{m+1} (b = 1)
  const std::vector<double> eyp = pad_ey(out.em.ey, closure);
  out.em.bz.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.bz[i] = s.em.bz[i] - delta / h * (eyp[i + 1] - eyp[i]);

  // momenta with the new fields and the explicit density (a = 1)
  out.fluid.qx.resize(n);
  out.fluid.qy.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ex_tilde = 0.5 * (out.em.ex[k + 1] + out.em.ex[k]);
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    out.fluid.qx[k] = s.fluid.qx[k] - delta / h * (f.fux[k + 2] - f.fux[k + 1]) -
                      delta * (s.fluid.n[k] * ex_tilde + s.fluid.qy[k] * bz_tilde);
    out.fluid.qy[k] = s.fluid.qy[k] - delta / h * (f.fuy[k + 2] - f.fuy[k + 1]) -
                      delta * (s.fluid.n[k] * out.em.ey[k] - s.fluid.qx[k] * bz_tilde);
  }

  // density from the implicit mass flux, recovered as the Ampere-x increment:
  // the same values drive both updates, so the Gauss identity telescopes and
  // lambda = 0 leaves the density bit-identical.
  std::vector<double> ftilde(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    ftilde[i] = lam2 * (out.em.ex[i] - s.em.ex[i]) / delta;
  out.fluid.n.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.fluid.n[k] = s.fluid.n[k] - delta / h * (ftilde[k + 1] - ftilde[k]);

  detail::apply_floor(out.fluid, cfg.density_floor);
  return out;
}

}  // namespace emx
