// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/tridiag.hpp"

#include <cmath>
#include <stdexcept>

#include "emx/errors.hpp"

namespace emx {

namespace {

void check_sizes(const TridiagonalSystem& s) {
  const std::size_t n = s.diag.size();
  if (n == 0) throw std::invalid_argument("solve_tridiagonal: empty system");
  if (s.sub.size() != n || s.sup.size() != n || s.rhs.size() != n)
    throw std::invalid_argument("solve_tridiagonal: inconsistent array sizes");
}

std::vector<double> thomas(const std::vector<double>& sub, const std::vector<double>& diag,
                           const std::vector<double>& sup, const std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  std::vector<double> c(n), x(n);
  double pivot = diag[0];
  if (pivot == 0.0) throw NumericalError("solve_tridiagonal: zero pivot");
  c[0] = sup[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = diag[i] - sub[i] * c[i - 1];
    if (pivot == 0.0) throw NumericalError("solve_tridiagonal: zero pivot");
    c[i] = sup[i] / pivot;
    x[i] = (rhs[i] - sub[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace

std::vector<double> solve_tridiagonal(const TridiagonalSystem& s) {
  check_sizes(s);
  const std::size_t n = s.size();

  if (!s.periodic) {
    if (n == 1) {
      if (s.diag[0] == 0.0) throw NumericalError("solve_tridiagonal: zero pivot");
      return {s.rhs[0] / s.diag[0]};
    }
    return thomas(s.sub, s.diag, s.sup, s.rhs);
  }

  // Cyclic closure: row 0 couples to x_{n-1} through sub[0], row n-1 to x_0
  // through sup[n-1].
  if (n == 1) {
    const double d = s.diag[0] + s.sub[0] + s.sup[0];
    if (d == 0.0) throw NumericalError("solve_tridiagonal: zero pivot");
    return {s.rhs[0] / d};
  }
  if (n == 2) {
    const double a00 = s.diag[0];
    const double a01 = s.sup[0] + s.sub[0];
    const double a10 = s.sub[1] + s.sup[1];
    const double a11 = s.diag[1];
    const double det = a00 * a11 - a01 * a10;
    if (det == 0.0) throw NumericalError("solve_tridiagonal: singular 2x2 cyclic system");
    return {(s.rhs[0] * a11 - a01 * s.rhs[1]) / det, (a00 * s.rhs[1] - a10 * s.rhs[0]) / det};
  }

  // Sherman-Morrison: A = A' + u v^T with u = (g, 0, ..., cb)^T and
  // v = (1, 0, ..., ca/g)^T, where ca = sub[0], cb = sup[n-1].
  const double ca = s.sub[0];
  const double cb = s.sup[n - 1];
  const double g = -s.diag[0];
  std::vector<double> diag = s.diag;
  diag[0] -= g;
  diag[n - 1] -= ca * cb / g;

  std::vector<double> y = thomas(s.sub, diag, s.sup, s.rhs);
  std::vector<double> u(n, 0.0);
  u[0] = g;
  u[n - 1] = cb;
  std::vector<double> z = thomas(s.sub, diag, s.sup, u);

  const double vy = y[0] + ca / g * y[n - 1];
  const double vz = z[0] + ca / g * z[n - 1];
  const double factor = vy / (1.0 + vz);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
  return x;
}

}  // namespace emx
