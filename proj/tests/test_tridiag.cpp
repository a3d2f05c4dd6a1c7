// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "emx/errors.hpp"
#include "emx/onefluid.hpp"
#include "emx/tridiag.hpp"

using namespace emx;

namespace {

// residual of A x - rhs including the cyclic corners
double residual_inf(const TridiagonalSystem& s, const std::vector<double>& x) {
  const std::size_t n = s.size();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double ax = s.diag[i] * x[i];
    if (i > 0) ax += s.sub[i] * x[i - 1];
    if (i + 1 < n) ax += s.sup[i] * x[i + 1];
    if (s.periodic) {
      if (i == 0) ax += s.sub[0] * x[n - 1];
      if (i == n - 1) ax += s.sup[n - 1] * x[0];
    }
    r = std::max(r, std::abs(ax - s.rhs[i]));
  }
  return r;
}

TridiagonalSystem random_dominant(std::size_t n, bool periodic, std::mt19937& rng) {
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> rhs(-5.0, 5.0);
  TridiagonalSystem s;
  s.periodic = periodic;
  s.sub.resize(n);
  s.diag.resize(n);
  s.sup.resize(n);
  s.rhs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.sub[i] = off(rng);
    s.sup[i] = off(rng);
    s.diag[i] = 2.5 + std::abs(s.sub[i]) + std::abs(s.sup[i]);
    s.rhs[i] = rhs(rng);
  }
  return s;
}

}  // namespace

TEST_CASE("three-unknown Dirichlet system solved by hand") {
  TridiagonalSystem s;
  s.sub = {0.0, -1.0, -1.0};
  s.diag = {2.0, 2.0, 2.0};
  s.sup = {-1.0, -1.0, 0.0};
  s.rhs = {1.0, 2.0, 3.0};
  const auto x = solve_tridiagonal(s);
  CHECK(x[0] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(x[2] == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("periodic constant-coefficient system: constant solution") {
  // E_y solve with constant coefficients and constant rhs: the Laplacian of
  // a constant vanishes, so E_y = r / (lambda^2 + delta^2 n)
  const double lambda = 0.3, delta = 0.01, h = 0.05, nval = 1.7, r = 2.4;
  const double sc = delta * delta / (h * h);
  const std::size_t n = 11;
  TridiagonalSystem s;
  s.periodic = true;
  s.sub.assign(n, -sc);
  s.sup.assign(n, -sc);
  s.diag.assign(n, lambda * lambda + delta * delta * nval + 2.0 * sc);
  s.rhs.assign(n, r);
  const auto x = solve_tridiagonal(s);
  const double expected = r / (lambda * lambda + delta * delta * nval);
  for (double v : x) CHECK(v == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("large lambda limit: mass term dominates") {
  const double lambda = 1e8;
  const std::size_t n = 9;
  TridiagonalSystem s;
  s.periodic = true;
  s.sub.assign(n, -1.0);
  s.sup.assign(n, -1.0);
  s.diag.assign(n, lambda * lambda + 2.0);
  s.rhs.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.rhs[i] = static_cast<double>(i) - 4.0;
  const auto x = solve_ey_elliptic(s);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(x[i] == doctest::Approx(s.rhs[i] / (lambda * lambda)).epsilon(1e-10));
}

TEST_CASE("random dominant systems: residual at solver accuracy") {
  std::mt19937 rng(19);
  for (const bool periodic : {false, true}) {
    for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{17},
                                std::size_t{256}}) {
      const TridiagonalSystem s = random_dominant(n, periodic, rng);
      const auto x = solve_tridiagonal(s);
      double scale = 0.0;
      for (double v : s.rhs) scale = std::max(scale, std::abs(v));
      CHECK(residual_inf(s, x) <= 1e-12 * std::max(scale, 1.0));
    }
  }
}

TEST_CASE("zero pivot is a hard error") {
  TridiagonalSystem s;
  s.sub = {0.0, 0.0};
  s.diag = {0.0, 1.0};
  s.sup = {1.0, 0.0};
  s.rhs = {1.0, 1.0};
  CHECK_THROWS_AS(solve_tridiagonal(s), NumericalError);
  s.diag = {-1.0, 1.0};
  CHECK_THROWS_AS(solve_ey_elliptic(s), NumericalError);  // non-positive diagonal
}
