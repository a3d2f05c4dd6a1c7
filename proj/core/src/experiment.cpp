// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
#include "emx/experiment.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "emx/errors.hpp"
#include "emx/flux.hpp"
#include "emx/gauss.hpp"
#include "emx/grid.hpp"
#include "emx/onefluid.hpp"
#include "emx/twofluid.hpp"

namespace emx {

ExperimentCase parse_case(const std::string& name) {
  if (name == "shock") return ExperimentCase::Shock;
  if (name == "rarefaction") return ExperimentCase::Rarefaction;
  if (name == "shock-magnetized") return ExperimentCase::ShockMagnetized;
  if (name == "pos-low") return ExperimentCase::PosLow;
  if (name == "pos-high") return ExperimentCase::PosHigh;
  if (name == "smooth") return ExperimentCase::Smooth;
  throw ConfigError("unknown case '" + name + "'");
}

std::string case_name(ExperimentCase c) {
  switch (c) {
    case ExperimentCase::Shock: return "shock";
    case ExperimentCase::Rarefaction: return "rarefaction";
    case ExperimentCase::ShockMagnetized: return "shock-magnetized";
    case ExperimentCase::PosLow: return "pos-low";
    case ExperimentCase::PosHigh: return "pos-high";
    case ExperimentCase::Smooth: return "smooth";
  }
  return "?";
}

namespace {

bool is_pos(ExperimentCase c) {
  return c == ExperimentCase::PosLow || c == ExperimentCase::PosHigh;
}

ScalingUnits pos_scaling(const ExperimentConfig& c) {
  return compute_scaling(c.pos_x0, c.pos_n0, c.pos_T0_ev * phys::kelvin_per_ev,
                         c.pos_mass_amu * phys::atomic_mass_unit);
}

// POS defaults derived from the physical inputs. The incident ramp and the
// final time are expressed in units of the model's plasma period (~lambda)
// so the drive stays slow against the model's wave speed 1/lambda.
void finalize_pos(ExperimentConfig& c) {
  const ScalingUnits s = pos_scaling(c);
  c.lambda = s.lambda;
  c.bc.incident.amplitude = s.to_dimensionless_efield(c.incident_amplitude_vpm);
  c.bc.incident.rise_time = 50.0 * s.lambda;
  c.t_end = 150.0 * s.lambda;
}

}  // namespace

ExperimentConfig ExperimentConfig::preset(ExperimentCase kase, int fluids, SchemeKind scheme,
                                          double lambda, std::size_t n_cells) {
  ExperimentConfig c;
  c.kase = kase;
  c.fluids = fluids;
  c.scheme = scheme;
  c.lambda = lambda;
  c.n_cells = n_cells;
  switch (kase) {
    case ExperimentCase::Shock:
      break;  // struct defaults are the shock defaults
    case ExperimentCase::Rarefaction:
      c.u_left = -100.0;
      c.u_right = 100.0;
      c.t_end = 2e-4;
      break;
    case ExperimentCase::ShockMagnetized:
      c.x_min = -0.2;
      c.x_max = 0.2;
      c.initial_bz = 0.2;
      c.bc.em = EMBC::SilverMuller;
      c.bc.bz_background = 0.2;
      break;
    case ExperimentCase::Smooth:
      c.x_min = 0.0;
      c.x_max = 1.0;
      c.t_end = 0.1;
      c.bc.fluid = FluidBC::Periodic;
      c.bc.em = EMBC::Periodic;
      break;
    case ExperimentCase::PosLow:
    case ExperimentCase::PosHigh:
      c.x_min = 0.0;
      c.x_max = 2.0;
      c.bc.em = EMBC::SilverMuller;
      if (kase == ExperimentCase::PosHigh) c.pos_n0 = 1e18;
      c.epsilon2 = (phys::electron_mass) / (c.pos_mass_amu * phys::atomic_mass_unit);
      finalize_pos(c);
      break;
  }
  return c;
}

SchemeConfig ExperimentConfig::scheme_config() const {
  SchemeConfig s = (scheme == SchemeKind::Classical) ? SchemeConfig::classical(lambda)
                                                     : SchemeConfig::ap(lambda);
  s.epsilon2 = epsilon2;
  s.pressure = pressure;
  s.cfl = cfl;
  s.density_floor = density_floor;
  s.ey_history_form = ey_history_form;
  return s;
}

void ExperimentConfig::validate() const {
  if (fluids != 1 && fluids != 2) throw ConfigError("config: fluids must be 1 or 2");
  if (n_cells == 0) throw ConfigError("config: n_cells must be positive");
  if (!(x_max > x_min)) throw ConfigError("config: x_max must exceed x_min");
  if (n_steps == 0 && !(t_end > 0.0)) throw ConfigError("config: t_end must be positive");
  if (dt_override < 0.0) throw ConfigError("config: dt_override must be nonnegative");
  bc.validate();
  scheme_config().validate();
}

const std::vector<double>* FieldFrame::find(const std::string& name) const {
  for (const auto& [key, col] : columns)
    if (key == name) return &col;
  return nullptr;
}

namespace {

double pos_density_profile(double x, const ExperimentConfig& c) {
  const double a = c.pos_plasma_min;
  const double b = c.pos_plasma_max;
  const double w = c.pos_ramp_fraction * (b - a);
  const double floor = c.density_floor;
  if (x <= a || x >= b) return floor;
  double ramp = 1.0;
  if (x < a + w) ramp = 0.5 * (1.0 - std::cos(std::numbers::pi * (x - a) / w));
  else if (x > b - w) ramp = 0.5 * (1.0 - std::cos(std::numbers::pi * (b - x) / w));
  return floor + (1.0 - floor) * ramp;
}

FluidState initial_fluid(const ExperimentConfig& c, const Grid1D& grid, bool moving_species) {
  const std::size_t n = c.n_cells;
  FluidState f = FluidState::uniform(n, 1.0);
  switch (c.kase) {
    case ExperimentCase::Shock:
    case ExperimentCase::Rarefaction:
    case ExperimentCase::ShockMagnetized:
      if (moving_species)
        for (std::size_t k = 0; k < n; ++k)
          f.qx[k] = grid.center(k) < 0.0 ? c.u_left : c.u_right;
      break;
    case ExperimentCase::Smooth:
      if (moving_species) {
        const double L = c.x_max - c.x_min;
        for (std::size_t k = 0; k < n; ++k)
          f.qx[k] = c.smooth_amplitude *
                    std::sin(2.0 * std::numbers::pi * (grid.center(k) - c.x_min) / L);
      }
      break;
    case ExperimentCase::PosLow:
    case ExperimentCase::PosHigh:
      for (std::size_t k = 0; k < n; ++k) {
        f.n[k] = pos_density_profile(grid.center(k), c);
        f.qx[k] = 0.0;
      }
      break;
  }
  return f;
}

EMField initial_em(const ExperimentConfig& c, const FluidState& fluid, double h) {
  EMField em = EMField::zero(c.n_cells);
  std::fill(em.bz.begin(), em.bz.end(), c.initial_bz);
  if (!is_pos(c.kase) && c.fluids == 1 && c.lambda > 0.0)
    em.ex = init_ex_from_gauss(fluid, c.lambda, h, 0.0);
  // POS and two-fluid data start charge-neutral, so the Gauss-consistent
  // field is the zero anchor everywhere.
  return em;
}

bool finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void check_finite_one(const OneFluidSnapshot& s) {
  if (!finite(s.fluid.n) || !finite(s.fluid.qx) || !finite(s.fluid.qy) || !finite(s.em.ex) ||
      !finite(s.em.ey) || !finite(s.em.bz))
    throw NumericalError("run_experiment: non-finite field values");
}

void check_finite_two(const TwoFluidSnapshot& s) {
  if (!finite(s.ion.n) || !finite(s.ion.qx) || !finite(s.ion.qy) || !finite(s.electron.n) ||
      !finite(s.electron.qx) || !finite(s.electron.qy) || !finite(s.em.ex) || !finite(s.em.ey) ||
      !finite(s.em.bz))
    throw NumericalError("run_experiment: non-finite field values");
}

std::vector<double> gauss_charge_one(const OneFluidSnapshot& s, double lambda, double h) {
  // lambda^2/h * dE_x + n, the exactly conserved combination
  std::vector<double> g(s.n_cells());
  const double l2h = lambda * lambda / h;
  for (std::size_t k = 0; k < g.size(); ++k)
    g[k] = l2h * (s.em.ex[k + 1] - s.em.ex[k]) + s.fluid.n[k];
  return g;
}

std::vector<double> gauss_charge_two(const TwoFluidSnapshot& s, double lambda, double h) {
  std::vector<double> g(s.n_cells());
  const double l2h = lambda * lambda / h;
  for (std::size_t k = 0; k < g.size(); ++k)
    g[k] = l2h * (s.em.ex[k + 1] - s.em.ex[k]) - (s.ion.n[k] - s.electron.n[k]);
  return g;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

FieldFrame make_frame_one(const OneFluidSnapshot& s, const Grid1D& grid) {
  FieldFrame f;
  f.t = s.t;
  f.x = grid.centers();
  f.columns.emplace_back("n", s.fluid.n);
  f.columns.emplace_back("qx", s.fluid.qx);
  f.columns.emplace_back("qy", s.fluid.qy);
  f.columns.emplace_back("Ex", face_average(s.em.ex));
  f.columns.emplace_back("Ey", s.em.ey);
  f.columns.emplace_back("Bz", face_average(s.em.bz));
  return f;
}

FieldFrame make_frame_two(const TwoFluidSnapshot& s, const Grid1D& grid) {
  FieldFrame f;
  f.t = s.t;
  f.x = grid.centers();
  f.columns.emplace_back("ni", s.ion.n);
  f.columns.emplace_back("qix", s.ion.qx);
  f.columns.emplace_back("qiy", s.ion.qy);
  f.columns.emplace_back("ne", s.electron.n);
  f.columns.emplace_back("qex", s.electron.qx);
  f.columns.emplace_back("qey", s.electron.qy);
  f.columns.emplace_back("Ex", face_average(s.em.ex));
  f.columns.emplace_back("Ey", s.em.ey);
  f.columns.emplace_back("Bz", face_average(s.em.bz));
  return f;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto t_start = std::chrono::steady_clock::now();

  const Grid1D grid(config.x_min, config.x_max, config.n_cells);
  const double h = grid.h();
  const SchemeConfig scfg = config.scheme_config();
  const BoundaryConditionSpec& bc = config.bc;

  RunResult result;
  result.fluids = config.fluids;
  result.scaling = is_pos(config.kase) ? pos_scaling(config) : ScalingUnits{};
  result.sm_lambda_zero_fallback = bc.em == EMBC::SilverMuller && config.lambda == 0.0;

  OneFluidSnapshot one;
  TwoFluidSnapshot two;
  if (config.fluids == 1) {
    one.fluid = initial_fluid(config, grid, /*moving_species=*/true);
    one.em = initial_em(config, one.fluid, h);
  } else {
    two.electron = initial_fluid(config, grid, /*moving_species=*/true);
    two.ion = initial_fluid(config, grid, /*moving_species=*/false);
    two.em = initial_em(config, two.electron, h);
  }

  const std::vector<double> gauss0 = (config.fluids == 1)
                                         ? gauss_charge_one(one, config.lambda, h)
                                         : gauss_charge_two(two, config.lambda, h);

  std::vector<double> snapshot_times = config.snapshot_times;
  std::sort(snapshot_times.begin(), snapshot_times.end());
  std::size_t next_snapshot = 0;
  const auto record = [&]() {
    result.frames.push_back(config.fluids == 1 ? make_frame_one(one, grid)
                                               : make_frame_two(two, grid));
  };
  while (next_snapshot < snapshot_times.size() && snapshot_times[next_snapshot] <= 0.0) {
    record();
    ++next_snapshot;
  }

  const bool fixed_step_count = config.n_steps > 0;
  const double t_end = config.t_end;
  std::int64_t steps = 0;
  double t = 0.0;

  while (fixed_step_count ? steps < config.n_steps : t < t_end * (1.0 - 1e-14)) {
    if (steps >= config.max_steps)
      throw ConfigError("run_experiment: exceeded max_steps = " +
                        std::to_string(config.max_steps));

    double delta;
    if (config.dt_override > 0.0) {
      delta = config.dt_override;
    } else {
      double mu;
      if (config.fluids == 1) {
        mu = max_interface_wave_speed(one.fluid, scfg.pressure, bc.fluid);
      } else {
        mu = std::max(
            max_interface_wave_speed(two.ion, scfg.pressure, bc.fluid),
            max_interface_wave_speed_electron(two.electron, scfg.pressure, scfg.epsilon2,
                                              bc.fluid));
      }
      delta = cfl_timestep(mu, h, scfg.cfl, scfg.lambda, config.scheme);
    }
    if (!fixed_step_count) {
      if (steps == 0) {
        const double estimate = std::ceil(t_end / delta);
        if (estimate > static_cast<double>(config.max_steps))
          throw ConfigError("run_experiment: the configured scheme would need about " +
                            std::to_string(static_cast<std::int64_t>(estimate)) +
                            " steps, above max_steps = " + std::to_string(config.max_steps));
      }
      delta = std::min(delta, t_end - t);
    }
    if (!(delta > 0.0)) throw NumericalError("run_experiment: nonpositive time step");

    if (config.fluids == 1) {
      one = (config.scheme == SchemeKind::Classical) ? step_classical(one, delta, scfg, bc, h)
                                                     : step_ap(one, delta, scfg, bc, h);
      check_finite_one(one);
      t = one.t;
    } else {
      two = (config.scheme == SchemeKind::Classical) ? step_classical(two, delta, scfg, bc, h)
                                                     : step_ap(two, delta, scfg, bc, h);
      check_finite_two(two);
      t = two.t;
    }
    ++steps;

    const std::vector<double> gauss_now = (config.fluids == 1)
                                              ? gauss_charge_one(one, config.lambda, h)
                                              : gauss_charge_two(two, config.lambda, h);
    const double drift = max_abs_diff(gauss_now, gauss0);
    result.gauss_drift_history.push_back(drift);
    result.gauss_drift_max = std::max(result.gauss_drift_max, drift);

    while (next_snapshot < snapshot_times.size() && t >= snapshot_times[next_snapshot] * (1.0 - 1e-12)) {
      record();
      ++next_snapshot;
    }
  }

  record();  // final state
  result.steps = steps;
  result.one = std::move(one);
  result.two = std::move(two);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

double l1_relative_error(std::span<const double> numerical, std::span<const double> reference,
                         double h) {
  if (numerical.size() != reference.size())
    throw std::invalid_argument("l1_relative_error: length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    num += std::abs(numerical[i] - reference[i]) * h;
    den += std::abs(reference[i]) * h;
  }
  if (den == 0.0) throw std::invalid_argument("l1_relative_error: zero-norm reference");
  return num / den;
}

std::vector<double> restrict_fine_to_coarse(std::span<const double> fine, std::size_t ratio) {
  if (ratio == 0 || fine.size() % ratio != 0)
    throw std::invalid_argument("restrict_fine_to_coarse: fine length not divisible by ratio");
  std::vector<double> coarse(fine.size() / ratio);
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < ratio; ++j) acc += fine[k * ratio + j];
    coarse[k] = acc / static_cast<double>(ratio);
  }
  return coarse;
}

double fit_loglog_slope(std::span<const double> h, std::span<const double> err) {
  if (h.size() != err.size() || h.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceResult convergence_study(const ExperimentConfig& config_template,
                                    std::span<const std::size_t> resolutions,
                                    std::size_t reference_cells) {
  if (resolutions.size() < 2)
    throw ConfigError("convergence_study: need at least two resolutions");
  for (std::size_t res : resolutions)
    if (res == 0 || reference_cells % res != 0)
      throw ConfigError("convergence_study: reference resolution must be an integer multiple "
                        "of every test resolution");

  ExperimentConfig ref_cfg = config_template;
  ref_cfg.scheme = SchemeKind::Classical;
  ref_cfg.n_cells = reference_cells;
  ref_cfg.out_dir.clear();
  const RunResult ref = run_experiment(ref_cfg);

  ConvergenceResult out;
  out.resolutions.assign(resolutions.begin(), resolutions.end());
  const double span_x = config_template.x_max - config_template.x_min;

  for (std::size_t res : resolutions) {
    ExperimentConfig cfg = config_template;
    cfg.n_cells = res;
    cfg.out_dir.clear();
    const RunResult run = run_experiment(cfg);
    out.h.push_back(span_x / static_cast<double>(res));
    const std::size_t ratio = reference_cells / res;

    for (std::size_t fi = 0; fi < run.frames.back().columns.size(); ++fi) {
      const std::string& field = run.frames.back().columns[fi].first;
      double err = 0.0;
      bool have = false;
      for (std::size_t fr = 0; fr < run.frames.size() && fr < ref.frames.size(); ++fr) {
        const auto* num = run.frames[fr].find(field);
        const auto* refcol = ref.frames[fr].find(field);
        if (num == nullptr || refcol == nullptr) continue;
        const std::vector<double> coarse = restrict_fine_to_coarse(*refcol, ratio);
        double den = 0.0;
        for (double v : coarse) den += std::abs(v);
        if (den == 0.0) continue;  // field identically zero in the reference
        err = std::max(err, l1_relative_error(*num, coarse, out.h.back()));
        have = true;
      }
      if (have) out.errors[field].push_back(err);
    }
  }

  for (const auto& [field, errs] : out.errors)
    if (errs.size() == out.h.size()) out.slopes[field] = fit_loglog_slope(out.h, errs);
  return out;
}

namespace {

void write_csv(const std::string& path, const FieldFrame& frame) {
  std::ofstream os(path);
  if (!os) throw ConfigError("emit_outputs: cannot open '" + path + "' for writing");
  os << "x";
  for (const auto& [name, col] : frame.columns) os << ',' << name;
  os << '\n';
  char buf[64];
  for (std::size_t r = 0; r < frame.x.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.17g", frame.x[r]);
    os << buf;
    for (const auto& [name, col] : frame.columns) {
      std::snprintf(buf, sizeof buf, ",%.17g", col[r]);
      os << buf;
    }
    os << '\n';
  }
  if (!os) throw ConfigError("emit_outputs: write failed for '" + path + "'");
}

nlohmann::json config_echo(const ExperimentConfig& c) {
  nlohmann::json j;
  j["case"] = case_name(c.kase);
  j["fluids"] = c.fluids;
  j["scheme"] = c.scheme == SchemeKind::Classical ? "classical" : "ap";
  j["lambda"] = c.lambda;
  j["n_cells"] = c.n_cells;
  j["cfl"] = c.cfl;
  j["t_end"] = c.t_end;
  j["x_min"] = c.x_min;
  j["x_max"] = c.x_max;
  j["initial_bz"] = c.initial_bz;
  j["epsilon2"] = c.epsilon2;
  j["density_floor"] = c.density_floor;
  j["dt_override"] = c.dt_override;
  j["n_steps"] = c.n_steps;
  j["ey_history_form"] = c.ey_history_form;
  j["fluid_bc"] = c.bc.fluid == FluidBC::Periodic ? "periodic" : "neumann";
  j["em_bc"] = c.bc.em == EMBC::Periodic ? "periodic"
               : c.bc.em == EMBC::SilverMuller ? "silver-muller" : "zero-field";
  j["incident_amplitude"] = c.bc.incident.amplitude;
  j["incident_rise_time"] = c.bc.incident.rise_time;
  j["bz_background"] = c.bc.bz_background;
  j["u_left"] = c.u_left;
  j["u_right"] = c.u_right;
  return j;
}

}  // namespace

void emit_outputs(const RunResult& result, const ExperimentConfig& config,
                  const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ConfigError("emit_outputs: cannot create '" + out_dir + "': " + ec.message());

  nlohmann::json summary;
  summary["config"] = config_echo(config);
  summary["steps"] = result.steps;
  summary["gauss_drift_max"] = result.gauss_drift_max;
  summary["wall_seconds"] = result.wall_seconds;
  summary["sm_lambda_zero_fallback"] = result.sm_lambda_zero_fallback;
  if (result.fluids == 1)
    summary["final_time"] = result.one.t;
  else
    summary["final_time"] = result.two.t;

  nlohmann::json files = nlohmann::json::array();
  char name[64];
  for (std::size_t i = 0; i < result.frames.size(); ++i) {
    std::snprintf(name, sizeof name, "snapshot_%03zu.csv", i);
    write_csv((fs::path(out_dir) / name).string(), result.frames[i]);
    files.push_back({{"file", name}, {"t", result.frames[i].t}});
  }
  summary["snapshots"] = files;

  std::ofstream os(fs::path(out_dir) / "summary.json");
  if (!os) throw ConfigError("emit_outputs: cannot write summary.json");
  os << summary.dump(2) << '\n';
}

void write_convergence_outputs(const ConvergenceResult& result, const std::string& label,
                               const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec)
    throw ConfigError("write_convergence_outputs: cannot create '" + out_dir +
                      "': " + ec.message());

  std::ofstream csv(fs::path(out_dir) / (label + "_errors.csv"));
  if (!csv) throw ConfigError("write_convergence_outputs: cannot write errors csv");
  csv << "field,n_cells,h,l1_error\n";
  char buf[128];
  for (const auto& [field, errs] : result.errors) {
    for (std::size_t i = 0; i < errs.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s,%zu,%.17g,%.17g\n", field.c_str(),
                    result.resolutions[i], result.h[i], errs[i]);
      csv << buf;
    }
  }

  nlohmann::json j;
  j["label"] = label;
  j["resolutions"] = result.resolutions;
  j["h"] = result.h;
  for (const auto& [field, slope] : result.slopes) j["slopes"][field] = slope;
  std::ofstream js(fs::path(out_dir) / (label + "_slopes.json"));
  if (!js) throw ConfigError("write_convergence_outputs: cannot write slopes json");
  js << j.dump(2) << '\n';
}

namespace {

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value '" + value + "' for key '" + key + "'");
  }
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value '" + value + "' for key '" + key + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  ExperimentCase kase = ExperimentCase::Shock;
  if (const auto* v = get("case")) kase = parse_case(*v);
  int fluids = 1;
  if (const auto* v = get("fluids")) fluids = static_cast<int>(to_int("fluids", *v));
  SchemeKind scheme = SchemeKind::AsymptoticPreserving;
  if (const auto* v = get("scheme")) {
    if (*v == "classical") scheme = SchemeKind::Classical;
    else if (*v == "ap") scheme = SchemeKind::AsymptoticPreserving;
    else throw ConfigError("config: scheme must be 'classical' or 'ap'");
  }
  double lambda = 1.0;
  if (const auto* v = get("lambda")) lambda = to_double("lambda", *v);
  std::size_t n_cells = 100;
  if (const auto* v = get("n_cells")) n_cells = static_cast<std::size_t>(to_int("n_cells", *v));

  ExperimentConfig c = ExperimentConfig::preset(kase, fluids, scheme, lambda, n_cells);

  bool pos_dirty = false;
  for (const auto& [key, value] : kv) {
    if (key == "case" || key == "fluids" || key == "scheme" || key == "n_cells") continue;
    if (key == "lambda") { c.lambda = to_double(key, value); continue; }
    if (key == "cfl") { c.cfl = to_double(key, value); continue; }
    if (key == "t_end") { c.t_end = to_double(key, value); continue; }
    if (key == "x_min") { c.x_min = to_double(key, value); continue; }
    if (key == "x_max") { c.x_max = to_double(key, value); continue; }
    if (key == "initial_bz") {
      c.initial_bz = to_double(key, value);
      c.bc.bz_background = c.initial_bz;
      continue;
    }
    if (key == "epsilon2") { c.epsilon2 = to_double(key, value); continue; }
    if (key == "density_floor") { c.density_floor = to_double(key, value); continue; }
    if (key == "dt_override") { c.dt_override = to_double(key, value); continue; }
    if (key == "n_steps") { c.n_steps = to_int(key, value); continue; }
    if (key == "max_steps") { c.max_steps = to_int(key, value); continue; }
    if (key == "ey_history_form") { c.ey_history_form = to_int(key, value) != 0; continue; }
    if (key == "u_left") { c.u_left = to_double(key, value); continue; }
    if (key == "u_right") { c.u_right = to_double(key, value); continue; }
    if (key == "smooth_amplitude") { c.smooth_amplitude = to_double(key, value); continue; }
    if (key == "fluid_bc") {
      if (value == "neumann") c.bc.fluid = FluidBC::Neumann;
      else if (value == "periodic") c.bc.fluid = FluidBC::Periodic;
      else throw ConfigError("config: fluid_bc must be 'neumann' or 'periodic'");
      continue;
    }
    if (key == "em_bc") {
      if (value == "silver-muller") c.bc.em = EMBC::SilverMuller;
      else if (value == "periodic") c.bc.em = EMBC::Periodic;
      else if (value == "zero-field") c.bc.em = EMBC::ZeroField;
      else throw ConfigError("config: em_bc must be 'silver-muller', 'periodic' or 'zero-field'");
      continue;
    }
    if (key == "incident_amplitude") { c.bc.incident.amplitude = to_double(key, value); continue; }
    if (key == "incident_rise_time") { c.bc.incident.rise_time = to_double(key, value); continue; }
    if (key == "bz_background") { c.bc.bz_background = to_double(key, value); continue; }
    if (key == "pressure") {
      if (value == "isothermal") c.pressure.kind = PressureKind::Isothermal;
      else if (value == "polytropic") c.pressure.kind = PressureKind::Polytropic;
      else throw ConfigError("config: pressure must be 'isothermal' or 'polytropic'");
      continue;
    }
    if (key == "pressure_T") { c.pressure.T = to_double(key, value); continue; }
    if (key == "pressure_C") { c.pressure.C = to_double(key, value); continue; }
    if (key == "pressure_gamma") { c.pressure.gamma = to_double(key, value); continue; }
    if (key == "pos_n0") { c.pos_n0 = to_double(key, value); pos_dirty = true; continue; }
    if (key == "pos_T0_ev") { c.pos_T0_ev = to_double(key, value); pos_dirty = true; continue; }
    if (key == "pos_x0") { c.pos_x0 = to_double(key, value); pos_dirty = true; continue; }
    if (key == "pos_mass_amu") { c.pos_mass_amu = to_double(key, value); pos_dirty = true; continue; }
    if (key == "pos_plasma_min") { c.pos_plasma_min = to_double(key, value); continue; }
    if (key == "pos_plasma_max") { c.pos_plasma_max = to_double(key, value); continue; }
    if (key == "pos_ramp_fraction") { c.pos_ramp_fraction = to_double(key, value); continue; }
    if (key == "incident_amplitude_vpm") {
      c.incident_amplitude_vpm = to_double(key, value);
      pos_dirty = true;
      continue;
    }
    if (key == "snapshot_times") {
      c.snapshot_times.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) c.snapshot_times.push_back(to_double(key, item));
      }
      continue;
    }
    if (key == "out_dir") { c.out_dir = value; continue; }
    throw ConfigError("config: unknown key '" + key + "'");
  }

  if (pos_dirty && is_pos(c.kase)) {
    finalize_pos(c);
    // explicit dimensionless overrides win over the rederived defaults
    if (const auto* v = get("lambda")) c.lambda = to_double("lambda", *v);
    if (const auto* v = get("incident_amplitude"))
      c.bc.incident.amplitude = to_double("incident_amplitude", *v);
    if (const auto* v = get("incident_rise_time"))
      c.bc.incident.rise_time = to_double("incident_rise_time", *v);
    if (const auto* v = get("t_end")) c.t_end = to_double("t_end", *v);
  }
  return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: empty key or value at line " + std::to_string(lineno));
    kv[key] = value;
  }
  return config_from_map(kv);
}

}  // namespace emx
