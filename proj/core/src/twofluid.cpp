// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/twofluid.hpp"

#include <stdexcept>

#include "emx/errors.hpp"
#include "emx/onefluid.hpp"
#include "emx/tridiag.hpp"
#include "scheme_detail.hpp"

namespace emx {

namespace {

void check_snapshot(const TwoFluidSnapshot& s) {
  const std::size_t n = s.ion.size();
  if (n == 0 || !s.ion.consistent() || !s.electron.consistent() || s.electron.size() != n)
    throw std::invalid_argument("two-fluid step: inconsistent species arrays");
  if (!s.em.consistent(n)) throw std::invalid_argument("two-fluid step: inconsistent EM arrays");
}

}  // namespace

TwoFluidSnapshot step_classical(const TwoFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                                const BoundaryConditionSpec& bc, double h) {
  cfg.validate();
  bc.validate();
  check_snapshot(s);
  if (cfg.kind() != SchemeKind::Classical)
    throw ConfigError("two-fluid step_classical: config is not the (0,0,1) triple");
  if (!(cfg.lambda > 0.0))
    throw ConfigError("two-fluid step_classical: lambda = 0 does not yield a valid recursion");

  const std::size_t n = s.n_cells();
  const double lam2 = cfg.lambda * cfg.lambda;
  const double eps2 = cfg.epsilon2;
  const PaddedFluid pi = pad_fluid(s.ion, bc.fluid);
  const PaddedFluid pe = pad_fluid(s.electron, bc.fluid);
  const detail::FluxTable fi = detail::flux_table(pi, cfg.pressure, Species::Ion, 1.0);
  const detail::FluxTable fe = detail::flux_table(pe, cfg.pressure, Species::Electron, eps2);

  TwoFluidSnapshot out;
  out.t = s.t + delta;
  out.step = s.step + 1;
  out.ey_prev = s.em.ey;

  out.ion.n.resize(n);
  out.electron.n.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.ion.n[k] = s.ion.n[k] - delta / h * (fi.fn[k + 2] - fi.fn[k + 1]);
    out.electron.n[k] = s.electron.n[k] - delta / h * (fe.fn[k + 2] - fe.fn[k + 1]);
  }

  // Faraday with the old E_y (b = 0)
  const EMClosure closure = em_closure(bc, s.em.bz.front(), s.em.bz.back(), cfg.lambda, s.t);
  const std::vector<double> eyp = pad_ey(s.em.ey, closure);
  out.em.bz.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.bz[i] = s.em.bz[i] - delta / h * (eyp[i + 1] - eyp[i]);

  // Ampere-x from the difference of the species mass fluxes
  out.em.ex.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.ex[i] = s.em.ex[i] - delta / lam2 * (fi.fn[i + 1] - fe.fn[i + 1]);

  // Ampere-y with the new B_z (c = 1), current -(q_iy - q_ey)
  out.em.ey.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.em.ey[k] = s.em.ey[k] + delta / lam2 *
                                    (-(s.ion.qy[k] - s.electron.qy[k]) -
                                     (out.em.bz[k + 1] - out.em.bz[k]) / h);

  // momenta: ion Lorentz force +, electron -, electron update divided by eps^2
  out.ion.qx.resize(n);
  out.ion.qy.resize(n);
  out.electron.qx.resize(n);
  out.electron.qy.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ex_tilde = 0.5 * (out.em.ex[k + 1] + out.em.ex[k]);
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    out.ion.qx[k] = s.ion.qx[k] - delta / h * (fi.fux[k + 2] - fi.fux[k + 1]) +
                    delta * (out.ion.n[k] * ex_tilde + s.ion.qy[k] * bz_tilde);
    out.ion.qy[k] = s.ion.qy[k] - delta / h * (fi.fuy[k + 2] - fi.fuy[k + 1]) +
                    delta * (out.ion.n[k] * out.em.ey[k] - s.ion.qx[k] * bz_tilde);
    out.electron.qx[k] =
        s.electron.qx[k] +
        (-delta / h * (fe.fux[k + 2] - fe.fux[k + 1]) -
         delta * (out.electron.n[k] * ex_tilde + s.electron.qy[k] * bz_tilde)) / eps2;
    out.electron.qy[k] =
        s.electron.qy[k] +
        (-delta / h * (fe.fuy[k + 2] - fe.fuy[k + 1]) -
         delta * (out.electron.n[k] * out.em.ey[k] - s.electron.qx[k] * bz_tilde)) / eps2;
  }

  detail::apply_floor(out.ion, cfg.density_floor);
  detail::apply_floor(out.electron, cfg.density_floor);
  return out;
}

TwoFluidSnapshot step_ap(const TwoFluidSnapshot& s, double delta, const SchemeConfig& cfg,
                         const BoundaryConditionSpec& bc, double h) {
  cfg.validate();
  bc.validate();
  check_snapshot(s);
  if (cfg.kind() != SchemeKind::AsymptoticPreserving)
    throw ConfigError("two-fluid step_ap: config is not the (1,1,1) triple");

  const std::size_t n = s.n_cells();
  const double lam2 = cfg.lambda * cfg.lambda;
  const double eps2 = cfg.epsilon2;
  const double d2 = delta * delta;
  const double sc = d2 / (h * h);
  const PaddedFluid pi = pad_fluid(s.ion, bc.fluid);
  const PaddedFluid pe = pad_fluid(s.electron, bc.fluid);
  const detail::FluxTable fi = detail::flux_table(pi, cfg.pressure, Species::Ion, 1.0);
  const detail::FluxTable fe = detail::flux_table(pe, cfg.pressure, Species::Electron, eps2);

  TwoFluidSnapshot out;
  out.t = s.t + delta;
  out.step = s.step + 1;
  out.ey_prev = s.em.ey;

  // elliptic system for E_y^{m+1}
  const EMClosure closure =
      em_closure(bc, s.em.bz.front(), s.em.bz.back(), cfg.lambda, s.t + delta);
  TridiagonalSystem sys;
  sys.sub.assign(n, -sc);
  sys.sup.assign(n, -sc);
  sys.diag.resize(n);
  sys.rhs.resize(n);
  sys.periodic = closure.periodic;
  const bool history = cfg.ey_history_form && s.ey_prev.size() == n;
  const auto fy_mix = [&](std::size_t j) { return fi.fuy[j] - fe.fuy[j] / eps2; };
  for (std::size_t k = 0; k < n; ++k) {
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    const double qx_mix = s.ion.qx[k] + s.electron.qx[k] / eps2;
    sys.diag[k] = lam2 + d2 * (s.ion.n[k] + s.electron.n[k] / eps2) + 2.0 * sc;
    if (history) {
      sys.rhs[k] = lam2 * (2.0 * s.em.ey[k] - s.ey_prev[k]) +
                   d2 / h * (fy_mix(k + 2) - fy_mix(k + 1)) + d2 * qx_mix * bz_tilde;
    } else {
      sys.rhs[k] = lam2 * s.em.ey[k] - delta * (s.ion.qy[k] - s.electron.qy[k]) -
                   delta / h * (s.em.bz[k + 1] - s.em.bz[k]) +
                   d2 / h * (fy_mix(k + 2) - fy_mix(k + 1)) + d2 * qx_mix * bz_tilde;
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
  const auto fx_mix = [&](std::size_t j) { return fi.fux[j] - fe.fux[j] / eps2; };
  out.em.ex.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double n_mix =
        (pi.n[i + 1] + pe.n[i + 1] / eps2) + (pi.n[i + 2] + pe.n[i + 2] / eps2);
    const double qy_mix =
        (pi.qy[i + 1] + pe.qy[i + 1] / eps2) + (pi.qy[i + 2] + pe.qy[i + 2] / eps2);
    const double a = lam2 + 0.5 * d2 * n_mix;
    out.em.ex[i] = (lam2 * s.em.ex[i] - delta * (fi.fn[i + 1] - fe.fn[i + 1]) +
                    0.5 * d2 / h * (fx_mix(i + 2) - fx_mix(i)) -
                    0.5 * d2 * qy_mix * s.em.bz[i]) / a;
  }

  // Faraday with E_y^{m+1} (b = 1)
  const std::vector<double> eyp = pad_ey(out.em.ey, closure);
  out.em.bz.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.em.bz[i] = s.em.bz[i] - delta / h * (eyp[i + 1] - eyp[i]);

  // momenta with the new fields and explicit densities (a = 1)
  out.ion.qx.resize(n);
  out.ion.qy.resize(n);
  out.electron.qx.resize(n);
  out.electron.qy.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double ex_tilde = 0.5 * (out.em.ex[k + 1] + out.em.ex[k]);
    const double bz_tilde = 0.5 * (s.em.bz[k + 1] + s.em.bz[k]);
    out.ion.qx[k] = s.ion.qx[k] - delta / h * (fi.fux[k + 2] - fi.fux[k + 1]) +
                    delta * (s.ion.n[k] * ex_tilde + s.ion.qy[k] * bz_tilde);
    out.ion.qy[k] = s.ion.qy[k] - delta / h * (fi.fuy[k + 2] - fi.fuy[k + 1]) +
                    delta * (s.ion.n[k] * out.em.ey[k] - s.ion.qx[k] * bz_tilde);
    out.electron.qx[k] =
        s.electron.qx[k] +
        (-delta / h * (fe.fux[k + 2] - fe.fux[k + 1]) -
         delta * (s.electron.n[k] * ex_tilde + s.electron.qy[k] * bz_tilde)) / eps2;
    out.electron.qy[k] =
        s.electron.qy[k] +
        (-delta / h * (fe.fuy[k + 2] - fe.fuy[k + 1]) -
         delta * (s.electron.n[k] * out.em.ey[k] - s.electron.qx[k] * bz_tilde)) / eps2;
  }

  // implicit mass fluxes: the ion flux by its defining formula, the electron
  // one from the Ampere-x increment so the two-species Gauss identity
  // telescopes exactly (and neutral lambda = 0 data stay neutral).
  std::vector<double> ftilde_i(n + 1), ftilde_e(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double fn_impl = implicit_mass_flux_twofluid(
        Species::Ion, fi.fn[i + 1], out.em.ex[i], pi.n[i + 1], pi.n[i + 2], pi.qy[i + 1],
        pi.qy[i + 2], s.em.bz[i], fi.fux[i + 2], fi.fux[i], delta, h, eps2);
    ftilde_i[i] = fn_impl;
    ftilde_e[i] = fn_impl + lam2 * (out.em.ex[i] - s.em.ex[i]) / delta;
  }
  out.ion.n.resize(n);
  out.electron.n.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.ion.n[k] = s.ion.n[k] - delta / h * (ftilde_i[k + 1] - ftilde_i[k]);
    out.electron.n[k] = s.electron.n[k] - delta / h * (ftilde_e[k + 1] - ftilde_e[k]);
  }

  detail::apply_floor(out.ion, cfg.density_floor);
  detail::apply_floor(out.electron, cfg.density_floor);
  return out;
}

}  // namespace emx
