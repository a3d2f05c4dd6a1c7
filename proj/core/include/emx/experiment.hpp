// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emx/boundary.hpp"
#include "emx/config.hpp"
#include "emx/scaling.hpp"
#include "emx/state.hpp"

namespace emx {

enum class ExperimentCase { Shock, Rarefaction, ShockMagnetized, PosLow, PosHigh, Smooth };

ExperimentCase parse_case(const std::string& name);
std::string case_name(ExperimentCase c);

/// Full description of one run. `preset` fills the per-case defaults; a flat
/// key=value config file can override any field (see parse_config_file).
struct ExperimentConfig {
  ExperimentCase kase = ExperimentCase::Shock;
  int fluids = 1;
  SchemeKind scheme = SchemeKind::AsymptoticPreserving;
  double lambda = 1.0;
  std::size_t n_cells = 100;
  double cfl = 0.5;
  double t_end = 5e-4;
  double x_min = -0.1;
  double x_max = 0.1;
  double initial_bz = 0.0;
  double epsilon2 = 1e-4;
  double density_floor = 1e-8;
  double dt_override = 0.0;     // fixed time step when > 0
  std::int64_t n_steps = 0;     // stop after this many steps when > 0
  std::int64_t max_steps = 20'000'000;
  bool ey_history_form = false;
  PressureLaw pressure{};
  BoundaryConditionSpec bc{};
  std::vector<double> snapshot_times;
  std::string out_dir;

  // Riemann initial velocities (x component, left/right of the origin).
  double u_left = 1.0;
  double u_right = -1.0;

  // Smooth case: u_x = smooth_amplitude * sin(2 pi x / L).
  double smooth_amplitude = 0.01;

  // POS physical inputs; lambda and the incident drive are derived from them.
  double pos_n0 = 1e16;        // m^-3
  double pos_T0_ev = 5.0;      // eV
  double pos_x0 = 0.1;         // m
  double pos_mass_amu = 12.0;  // C+ ions
  double pos_plasma_min = 0.5;
  double pos_plasma_max = 1.5;
  double pos_ramp_fraction = 0.05;
  double incident_amplitude_vpm = -1.8e8;  // V/m, nondimensionalized by E0

  static ExperimentConfig preset(ExperimentCase kase, int fluids, SchemeKind scheme,
                                 double lambda, std::size_t n_cells);

  SchemeConfig scheme_config() const;
  void validate() const;
};

/// Everything on cell centers, ready for CSV output and error norms.
struct FieldFrame {
  double t = 0.0;
  std::vector<double> x;
  std::vector<std::pair<std::string, std::vector<double>>> columns;

  const std::vector<double>* find(const std::string& name) const;
};

struct RunResult {
  int fluids = 1;
  OneFluidSnapshot one;
  TwoFluidSnapshot two;
  std::vector<FieldFrame> frames;  // requested snapshots, final state last
  std::vector<double> gauss_drift_history;
  double gauss_drift_max = 0.0;
  double wall_seconds = 0.0;
  std::int64_t steps = 0;
  bool sm_lambda_zero_fallback = false;
  ScalingUnits scaling;  // identity units except for the POS cases
};

/// Initializes the run (including E_x from the Gauss law), steps to t_end
/// with the configured scheme and CFL rule, and records the requested
/// snapshots. Throws NumericalError on NaN/Inf and ConfigError when the
/// classical scheme would exceed max_steps (the error reports the estimate).
RunResult run_experiment(const ExperimentConfig& config);

/// Relative L1 distance: sum |num - ref| * h / (sum |ref| * h). Throws for a
/// zero-norm reference or mismatched lengths.
double l1_relative_error(std::span<const double> numerical, std::span<const double> reference,
                         double h);

/// Conservative restriction: each coarse value is the mean of its `ratio`
/// fine cells. The fine length must be divisible by ratio.
std::vector<double> restrict_fine_to_coarse(std::span<const double> fine, std::size_t ratio);

/// Least-squares slope of log(err) against log(h).
double fit_loglog_slope(std::span<const double> h, std::span<const double> err);

struct ConvergenceResult {
  std::vector<std::size_t> resolutions;
  std::vector<double> h;
  // field name -> per-resolution L1 error (max over recorded snapshot times)
  std::map<std::string, std::vector<double>> errors;
  std::map<std::string, double> slopes;
};

/// Runs a classical reference at `reference_cells`, then the template scheme
/// at each resolution, and fits the error slopes field by field.
ConvergenceResult convergence_study(const ExperimentConfig& config_template,
                                    std::span<const std::size_t> resolutions,
                                    std::size_t reference_cells);

/// Writes snapshot_###.csv per frame (17 significant digits, bit-stable for
/// identical configs) plus a summary.json with the config echo, Gauss drift,
/// and timing.
void emit_outputs(const RunResult& result, const ExperimentConfig& config,
                  const std::string& out_dir);

/// errors.csv (scheme-agnostic rows: field,n_cells,h,l1_error) and
/// slopes.json under out_dir.
void write_convergence_outputs(const ConvergenceResult& result, const std::string& label,
                               const std::string& out_dir);

/// Flat key = value file, '#' comments. Unknown keys raise ConfigError.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);

}  // namespace emx
