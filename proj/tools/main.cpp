// Copyright (c) 2026, the emx authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: Riemann/POS experiment runs, convergence studies,
// linearized stability scans, dispersion tables and unit scaling.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "emx/errors.hpp"
#include "emx/experiment.hpp"
#include "emx/scaling.hpp"
#include "emx/stability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw emx::ConfigError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw emx::ConfigError(std::string("empty ") + what + " list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (double v : parse_double_list(text, what)) {
    if (v <= 0) throw emx::ConfigError(std::string("nonpositive ") + what + " entry");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

int cmd_run(const std::string& config_path, const std::string& out_override) {
  emx::ExperimentConfig config = emx::parse_config_file(config_path);
  if (!out_override.empty()) config.out_dir = out_override;
  if (config.out_dir.empty()) config.out_dir = "out";

  const emx::RunResult result = emx::run_experiment(config);
  emx::emit_outputs(result, config, config.out_dir);

  std::printf("case=%s fluids=%d scheme=%s lambda=%.6g n_cells=%zu\n",
              emx::case_name(config.kase).c_str(), config.fluids,
              config.scheme == emx::SchemeKind::Classical ? "classical" : "ap", config.lambda,
              config.n_cells);
  std::printf("steps=%lld final_t=%.9g gauss_drift_max=%.3e wall=%.3fs\n",
              static_cast<long long>(result.steps),
              result.fluids == 1 ? result.one.t : result.two.t, result.gauss_drift_max,
              result.wall_seconds);
  if (result.sm_lambda_zero_fallback)
    std::printf("note: Silver-Muller closure degenerated to zero-gradient rows (lambda = 0)\n");
  std::printf("outputs: %s\n", config.out_dir.c_str());
  return kExitOk;
}

int cmd_converge(const std::string& case_name, int fluids, const std::string& scheme,
                 double lambda, const std::string& resolutions, std::size_t reference,
                 double t_end, const std::string& out_dir) {
  const auto res = parse_size_list(resolutions, "resolution");
  const std::vector<std::string> schemes =
      scheme == "both" ? std::vector<std::string>{"classical", "ap"}
                       : std::vector<std::string>{scheme};

  for (const std::string& s : schemes) {
    emx::ExperimentConfig tmpl = emx::ExperimentConfig::preset(
        emx::parse_case(case_name), fluids,
        s == "classical" ? emx::SchemeKind::Classical : emx::SchemeKind::AsymptoticPreserving,
        lambda, res.front());
    if (t_end > 0) tmpl.t_end = t_end;
    const emx::ConvergenceResult result = emx::convergence_study(tmpl, res, reference);
    emx::write_convergence_outputs(result, s, out_dir);
    for (const auto& [field, slope] : result.slopes)
      std::printf("%s %s slope=%.4f\n", s.c_str(), field.c_str(), slope);
  }
  std::printf("outputs: %s\n", out_dir.c_str());
  return kExitOk;
}

int cmd_stability(const std::string& scheme, const std::string& lambda_list,
                  const std::string& ratio_list, double h, double gamma, double temperature,
                  std::size_t n_xi, const std::string& out_file) {
  const auto triple = parse_size_list(scheme, "scheme flag");
  if (triple.size() != 3) throw emx::ConfigError("--scheme needs three comma-separated flags");
  const auto lambdas = parse_double_list(lambda_list, "lambda");
  const auto ratios = parse_double_list(ratio_list, "dt-over-h");

  const auto rows = emx::stability_region_scan(static_cast<int>(triple[0]),
                                               static_cast<int>(triple[1]),
                                               static_cast<int>(triple[2]), lambdas, ratios, h,
                                               gamma, temperature, n_xi);
  if (out_file.empty()) {
    emx::write_stability_csv(std::cout, rows);
  } else {
    std::ofstream os(out_file);
    if (!os) throw emx::ConfigError("cannot open '" + out_file + "'");
    emx::write_stability_csv(os, rows);
    std::printf("outputs: %s\n", out_file.c_str());
  }
  return kExitOk;
}

int cmd_dispersion(double lambda, double temperature, double xi_max, std::size_t samples,
                   const std::string& out_file) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) throw emx::ConfigError("cannot open '" + out_file + "'");
    os = &file;
  }
  (*os) << "xi,s_em_re,s_em_im,s_es_re,s_es_im\n";
  char buf[200];
  for (std::size_t i = 0; i < samples; ++i) {
    const double xi = xi_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    const emx::DispersionModes m = emx::dispersion_modes(lambda, temperature, xi);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", xi, m.em_plus.real(),
                  m.em_plus.imag(), m.es_plus.real(), m.es_plus.imag());
    (*os) << buf;
  }
  if (!out_file.empty()) std::printf("outputs: %s\n", out_file.c_str());
  return kExitOk;
}

int cmd_scaling(double n0, double T0_ev, double x0, double mass_amu) {
  const emx::ScalingUnits s = emx::compute_scaling(
      x0, n0, T0_ev * emx::phys::kelvin_per_ev, mass_amu * emx::phys::atomic_mass_unit);
  std::printf("{\n");
  std::printf("  \"x0_m\": %.17g,\n", s.x0);
  std::printf("  \"n0_m3\": %.17g,\n", s.n0);
  std::printf("  \"T0_K\": %.17g,\n", s.T0);
  std::printf("  \"mass_kg\": %.17g,\n", s.mass);
  std::printf("  \"u0_m_per_s\": %.17g,\n", s.u0);
  std::printf("  \"t0_s\": %.17g,\n", s.t0);
  std::printf("  \"p0_Pa\": %.17g,\n", s.p0);
  std::printf("  \"E0_V_per_m\": %.17g,\n", s.E0);
  std::printf("  \"B0_T\": %.17g,\n", s.B0);
  std::printf("  \"lambda\": %.17g,\n", s.lambda);
  std::printf("  \"alpha\": %.17g,\n", s.alpha);
  std::printf("  \"beta\": %.17g\n", s.beta);
  std::printf("}\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D Euler-Maxwell plasma solver: classical and asymptotic-preserving schemes"};
  app.require_subcommand(1);

  // run
  std::string run_config, run_out;
  CLI::App* run = app.add_subcommand("run", "run one experiment from a config file");
  run->add_option("--config", run_config, "key = value config file")->required();
  run->add_option("--out", run_out, "output directory (overrides out_dir)");

  // converge
  std::string cv_case = "shock", cv_scheme = "both", cv_res;
  int cv_fluids = 1;
  double cv_lambda = 1.0, cv_t_end = 0.0;
  std::size_t cv_ref = 0;
  std::string cv_out = "converge_out";
  CLI::App* conv = app.add_subcommand("converge", "L1 convergence study against a resolved "
                                                  "classical reference");
  conv->add_option("--case", cv_case, "shock|rarefaction|shock-magnetized|smooth");
  conv->add_option("--fluids", cv_fluids, "1 or 2");
  conv->add_option("--scheme", cv_scheme, "classical|ap|both");
  conv->add_option("--lambda", cv_lambda, "scaled Debye length");
  conv->add_option("--resolutions", cv_res, "comma list of cell counts")->required();
  conv->add_option("--reference", cv_ref, "reference cell count")->required();
  conv->add_option("--t-end", cv_t_end, "override the preset final time");
  conv->add_option("--out", cv_out, "output directory");

  // stability
  std::string st_scheme, st_lambdas, st_ratios, st_out;
  double st_h = 0.1, st_gamma = 0.5, st_T = 1.0;
  std::size_t st_xi = 2049;
  CLI::App* stab = app.add_subcommand("stability", "max growth factor scan of the linearized "
                                                   "schemes");
  stab->add_option("--scheme", st_scheme, "implicitness triple a,b,c")->required();
  stab->add_option("--lambda-list", st_lambdas, "comma list of lambdas")->required();
  stab->add_option("--dt-over-h", st_ratios, "comma list of time-step ratios")->required();
  stab->add_option("--h", st_h, "mesh size");
  stab->add_option("--gamma", st_gamma, "viscosity constant (beta = gamma*h)");
  stab->add_option("--temperature", st_T, "linearization temperature p'(1)");
  stab->add_option("--xi-samples", st_xi, "wave numbers sampled on [0, pi/h]");
  stab->add_option("--out", st_out, "CSV output file (default stdout)");

  // dispersion
  double dp_lambda = 1.0, dp_T = 1.0, dp_xi_max = 10.0;
  std::size_t dp_samples = 101;
  std::string dp_out;
  CLI::App* disp = app.add_subcommand("dispersion", "continuous electromagnetic/electrostatic "
                                                    "mode frequencies");
  disp->add_option("--lambda", dp_lambda, "scaled Debye length")->required();
  disp->add_option("--t", dp_T, "linearization temperature p'(1)");
  disp->add_option("--xi-max", dp_xi_max, "largest wave number")->required();
  disp->add_option("--samples", dp_samples, "number of xi samples");
  disp->add_option("--out", dp_out, "CSV output file (default stdout)");

  // scaling
  double sc_n0 = 1e16, sc_T0 = 5.0, sc_x0 = 0.1, sc_mass = 12.0;
  CLI::App* scal = app.add_subcommand("scaling", "physical-to-dimensionless reference units");
  scal->add_option("--n0", sc_n0, "density scale [m^-3]")->required();
  scal->add_option("--T0", sc_T0, "temperature scale [eV]")->required();
  scal->add_option("--x0", sc_x0, "length scale [m]")->required();
  scal->add_option("--mass", sc_mass, "particle mass [amu]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(run_config, run_out);
    if (conv->parsed())
      return cmd_converge(cv_case, cv_fluids, cv_scheme, cv_lambda, cv_res, cv_ref, cv_t_end,
                          cv_out);
    if (stab->parsed())
      return cmd_stability(st_scheme, st_lambdas, st_ratios, st_h, st_gamma, st_T, st_xi, st_out);
    if (disp->parsed()) return cmd_dispersion(dp_lambda, dp_T, dp_xi_max, dp_samples, dp_out);
    if (scal->parsed()) return cmd_scaling(sc_n0, sc_T0, sc_x0, sc_mass);
  } catch (const emx::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const emx::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
