// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "emx/errors.hpp"
#include "emx/gauss.hpp"
#include "emx/grid.hpp"
#include "emx/pressure.hpp"
#include "emx/scaling.hpp"

using namespace emx;

TEST_CASE("grid geometry: centers and interfaces interleave") {
  const Grid1D g(-0.1, 0.1, 8);
  CHECK(g.h() == doctest::Approx(0.025).epsilon(1e-15));
  CHECK(g.interfaces().size() == 9);
  CHECK(g.centers().size() == 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(g.interface(k + 1) - g.center(k) == doctest::Approx(g.h() / 2).epsilon(1e-13));
    CHECK(g.center(k) - g.interface(k) == doctest::Approx(g.h() / 2).epsilon(1e-13));
  }
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0), ConfigError);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 4), ConfigError);
}

TEST_CASE("pressure law values and derivatives") {
  const auto iso1 = PressureLaw::isothermal(1.0);
  CHECK(pressure_eval(iso1, 1.0).first == 1.0);
  CHECK(pressure_eval(iso1, 1.0).second == 1.0);

  const auto iso2 = PressureLaw::isothermal(2.0);
  CHECK(pressure_eval(iso2, 3.0).first == 6.0);
  CHECK(pressure_eval(iso2, 3.0).second == 2.0);

  const auto poly = PressureLaw::polytropic(1.0, 5.0 / 3.0);
  const auto [p, dp] = pressure_eval(poly, 8.0);
  CHECK(p == doctest::Approx(32.0).epsilon(1e-14));
  CHECK(dp == doctest::Approx(20.0 / 3.0).epsilon(1e-14));

  CHECK_THROWS_AS(pressure_eval(iso1, 0.0), std::domain_error);
  CHECK_THROWS_AS(pressure_eval(iso1, -1.0), std::domain_error);
}

TEST_CASE("sound speed") {
  const auto iso1 = PressureLaw::isothermal(1.0);
  CHECK(sound_speed(iso1, 0.37) == 1.0);
  const auto iso4 = PressureLaw::isothermal(4.0);
  CHECK(sound_speed(iso4, 2.0) == 2.0);
  const auto poly = PressureLaw::polytropic(1.0, 2.0);
  CHECK(sound_speed(poly, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(poly.linearization_temperature() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hyperbolicity: p' stays positive on random densities") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(1e-8, 1e3);
  const auto poly = PressureLaw::polytropic(0.7, 1.4);
  const auto iso = PressureLaw::isothermal(0.3);
  for (int i = 0; i < 200; ++i) {
    const double n = dist(rng);
    CHECK(pressure_eval(poly, n).second > 0.0);
    CHECK(pressure_eval(iso, n).second > 0.0);
  }
}

TEST_CASE("scaling: POS reference points") {
  // lambda = sqrt(eps0 kB T0 / (e^2 n0 x0^2)), evaluated independently
  const double T0 = 5.0 * phys::kelvin_per_ev;
  const auto s_low = compute_scaling(0.1, 1e16, T0, 12.0 * phys::atomic_mass_unit);
  const double kT = phys::boltzmann * T0;
  const double lambda_ref = std::sqrt(phys::vacuum_permittivity * kT /
                                      (phys::elementary_charge * phys::elementary_charge * 1e16 *
                                       0.1 * 0.1));
  CHECK(s_low.lambda == doctest::Approx(lambda_ref).epsilon(1e-14));
  CHECK(s_low.lambda == doctest::Approx(1.66e-3).epsilon(0.01));

  const auto s_high = compute_scaling(0.1, 1e18, T0, 12.0 * phys::atomic_mass_unit);
  CHECK(s_high.lambda == doctest::Approx(s_low.lambda / 10.0).epsilon(1e-13));
  CHECK(s_high.lambda == doctest::Approx(1.66e-4).epsilon(0.01));

  // E0 = kB T0 / (e x0): 5 eV over 0.1 m gives 50 V/m
  CHECK(s_low.E0 == doctest::Approx(50.0).epsilon(1e-12));
  CHECK(s_low.alpha == s_low.lambda);
  CHECK(s_low.beta == 1.0);
}

TEST_CASE("scaling: lambda = 1 by construction") {
  // choose n0 so that eps0 kB T0 = e^2 n0 x0^2
  const double T0 = 300.0;
  const double x0 = 0.05;
  const double n0 = phys::vacuum_permittivity * phys::boltzmann * T0 /
                    (phys::elementary_charge * phys::elementary_charge * x0 * x0);
  const auto s = compute_scaling(x0, n0, T0, phys::electron_mass);
  CHECK(s.lambda == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("scaling: unit relations and round trip") {
  const auto s = compute_scaling(0.07, 3e17, 2.1e4, 12.0 * phys::atomic_mass_unit);
  const double kT = phys::boltzmann * s.T0;
  CHECK(s.u0 == doctest::Approx(std::sqrt(kT / s.mass)).epsilon(1e-15));
  CHECK(s.t0 == doctest::Approx(s.x0 / s.u0).epsilon(1e-15));
  CHECK(s.E0 == doctest::Approx(kT / (phys::elementary_charge * s.x0)).epsilon(1e-15));
  CHECK(s.B0 == doctest::Approx(s.E0 / s.u0).epsilon(1e-15));
  CHECK(s.p0 == doctest::Approx(s.n0 * kT).epsilon(1e-15));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(1e-6, 1e6);
  for (int i = 0; i < 50; ++i) {
    const double v = dist(rng);
    CHECK(s.to_physical_length(s.to_dimensionless_length(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(s.to_physical_time(s.to_dimensionless_time(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(s.to_physical_velocity(s.to_dimensionless_velocity(v)) ==
          doctest::Approx(v).epsilon(1e-14));
    CHECK(s.to_physical_efield(s.to_dimensionless_efield(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(s.to_physical_bfield(s.to_dimensionless_bfield(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(s.to_physical_pressure(s.to_dimensionless_pressure(v)) ==
          doctest::Approx(v).epsilon(1e-14));
  }
  CHECK_THROWS_AS(compute_scaling(-1.0, 1e16, 300.0, 1e-26), ConfigError);
}

TEST_CASE("gauss residual: neutral and floor cases") {
  FluidState f = FluidState::uniform(5, 1.0);
  EMField em = EMField::zero(5);
  for (double r : gauss_residual(f, em, 0.7, 0.01)) CHECK(r == 0.0);

  // lambda = 0 kills the field contribution entirely
  em.ex = {1.0, -2.0, 3.0, 0.5, 0.0, 4.0};
  for (double r : gauss_residual(f, em, 0.0, 0.01)) CHECK(r == 0.0);
}

TEST_CASE("gauss residual: three-cell hand case") {
  // interfaces (0, 1, 0, -1), n = (0, 2, 1), lambda = h = 1:
  // r_k = (E_{k+1} - E_k) - (1 - n_k) evaluated cell by cell gives (0, 0, -1)
  FluidState f;
  f.n = {0.0, 2.0, 1.0};
  f.qx = {0.0, 0.0, 0.0};
  f.qy = {0.0, 0.0, 0.0};
  EMField em = EMField::zero(3);
  em.ex = {0.0, 1.0, 0.0, -1.0};
  const auto r = gauss_residual(f, em, 1.0, 1.0);
  CHECK(r[0] == doctest::Approx(0.0));
  CHECK(r[1] == doctest::Approx(0.0));
  CHECK(r[2] == doctest::Approx(-1.0));
}

TEST_CASE("gauss residual: linear in (E_x, n)") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double lambda = 0.8, h = 0.05;
  const std::size_t n = 7;
  const auto randomized = [&]() {
    FluidState f = FluidState::uniform(n, 1.0);
    EMField em = EMField::zero(n);
    for (auto& v : f.n) v = dist(rng);
    for (auto& v : em.ex) v = dist(rng);
    return std::pair{f, em};
  };
  auto [fa, ema] = randomized();
  auto [fb, emb] = randomized();
  const double wa = 0.3, wb = -1.7;

  FluidState fc = FluidState::uniform(n, 1.0);
  EMField emc = EMField::zero(n);
  // the affine background (1 - n) makes the residual linear in the
  // deviation; combine so the weights sum to one
  const double wbb = 1.0 - wa;
  for (std::size_t k = 0; k < n; ++k) fc.n[k] = wa * fa.n[k] + wbb * fb.n[k];
  for (std::size_t i = 0; i <= n; ++i) emc.ex[i] = wa * ema.ex[i] + wbb * emb.ex[i];
  (void)wb;

  const auto ra = gauss_residual(fa, ema, lambda, h);
  const auto rb = gauss_residual(fb, emb, lambda, h);
  const auto rc = gauss_residual(fc, emc, lambda, h);
  for (std::size_t k = 0; k < n; ++k)
    CHECK(rc[k] == doctest::Approx(wa * ra[k] + wbb * rb[k]).epsilon(1e-12));
}

TEST_CASE("two-fluid gauss residual sign") {
  FluidState ion = FluidState::uniform(3, 2.0);
  FluidState ele = FluidState::uniform(3, 0.5);
  EMField em = EMField::zero(3);
  const auto r = gauss_residual(ion, ele, 1.0, 1.0);
  for (double v : r) CHECK(v == doctest::Approx(-1.5));
}

TEST_CASE("face average and interface midpoints") {
  const std::vector<double> two{1.0, 3.0};
  CHECK(face_average(two)[0] == 2.0);

  const std::vector<double> constant{4.2, 4.2, 4.2, 4.2};
  for (double v : face_average(constant)) CHECK(v == 4.2);

  const std::vector<double> three{0.0, 1.0, 4.0};
  const auto avg = face_average(three);
  CHECK(avg[0] == 0.5);
  CHECK(avg[1] == 2.5);

  const std::vector<double> centers{1.0, 2.0, 5.0};
  const auto mid = interface_midpoints(centers);
  CHECK(mid[0] == 1.5);
  CHECK(mid[1] == 3.5);

  // a linear-in-x interface array averages to the exact center values
  const Grid1D g(0.0, 1.0, 16);
  std::vector<double> lin(g.n_cells + 1);
  for (std::size_t i = 0; i <= g.n_cells; ++i) lin[i] = 3.0 * g.interface(i) - 0.5;
  const auto centers_from_faces = face_average(lin);
  for (std::size_t k = 0; k < g.n_cells; ++k)
    CHECK(centers_from_faces[k] == doctest::Approx(3.0 * g.center(k) - 0.5).epsilon(1e-14));

  CHECK_THROWS_AS(face_average(std::vector<double>{1.0}), std::invalid_argument);
}
