#include "plasmod/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "plasmod/csv_writer.hpp"
#include "plasmod/presets.hpp"
#include "plasmod/version.hpp"

namespace plasmod {

namespace {

struct Overrides {
  std::string config_path;
  std::optional<double> E, omega, omega_p, kT, T_eV;
  std::optional<double> q_min, q_max;
  std::optional<int> steps, max_abs_m, threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
};

void add_common_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "INI config file ([plasma]/[field]/[solver]/[sweep])");
  cmd->add_option("--E", o.E, "field amplitude E_amp [V/m]");
  cmd->add_option("--omega", o.omega, "radiation angular frequency [rad/s]");
  cmd->add_option("--omega-p", o.omega_p, "plasma natural frequency [rad/s]");
  cmd->add_option("--kT", o.kT, "thermal energy k_B*T [J]");
  cmd->add_option("--T-eV", o.T_eV, "temperature in eV (alternative to --kT)");
  cmd->add_option("--max-abs-m", o.max_abs_m, "photon-number cap (-1 = full sum)");
  cmd->add_option("--seed", o.seed, "seed for the random-q mode");
  cmd->add_option("--threads", o.threads, "row workers (0 = hardware)");
  cmd->add_option("--out", o.out, "output CSV path");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig resolve_config(const Overrides& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) {
    cfg = parse_config(slurp(o.config_path));
  } else {
    // Flag-only baseline (echoed in full in the CSV header).
    cfg.sweep.plasma.omega_p = 6e11;
    cfg.sweep.plasma.kT = 1.6e-19;
    cfg.sweep.field.E_amp = 10.0;
    cfg.sweep.field.omega = 3e7;
  }
  if (o.E) cfg.sweep.field.E_amp = *o.E;
  if (o.omega) cfg.sweep.field.omega = *o.omega;
  if (o.omega_p) cfg.sweep.plasma.omega_p = *o.omega_p;
  if (o.kT) cfg.sweep.plasma.kT = *o.kT;
  if (o.T_eV) {
    if (o.kT) throw std::runtime_error("give either --kT or --T-eV, not both");
    cfg.sweep.plasma.kT = *o.T_eV * constants::joule_per_ev;
  }
  if (o.max_abs_m) {
    cfg.sweep.max_abs_m =
        *o.max_abs_m < 0 ? std::nullopt : std::optional<int>(*o.max_abs_m);
  }
  if (o.seed) cfg.sweep.seed = *o.seed;
  if (o.threads) cfg.sweep.threads = *o.threads;
  if (o.steps) cfg.sweep.steps = *o.steps;
  if (o.q_min) cfg.sweep.min = *o.q_min;
  if (o.q_max) cfg.sweep.max = *o.q_max;
  if (o.out) cfg.output_path = *o.out;
  return cfg;
}

int run_and_emit(const RunConfig& cfg, std::ostream& out) {
  const SweepResult result = run_sweep(cfg.sweep);
  emit_csv(result, cfg, cfg.output_path);
  out << "wrote " << result.rows.size() << " rows to " << cfg.output_path << "\n";
  return 0;
}

void print_point(std::ostream& out, double q, double Omega, const RunConfig& cfg) {
  const SweepSpec& sw = cfg.sweep;
  EvalOptions opt;
  opt.tail_tol = sw.tail_tol;
  opt.max_abs_m = sw.max_abs_m;
  const DrivenPlasma ctx = make_context(sw.field, sw.plasma);
  const BesselWeights w = weights_for(q, ctx, opt);

  const DielectricValue er = eps_real(q, Omega, ctx, w, opt);
  out << "q = " << format_double(q) << "\n";
  out << "Omega = " << format_double(Omega) << "\n";
  out << "eps_R = " << format_double(er.value) << "\n";

  auto guarded = [&](auto&& fn) -> std::string {
    try {
      return format_double(fn());
    } catch (const std::domain_error&) {
      return "nan";
    }
  };
  out << "eps_I = " << guarded([&] { return eps_imag(q, Omega, ctx, w, opt).value; }) << "\n";
  out << "deps_dOmega = "
      << guarded([&] { return d_eps_real_dOmega(q, Omega, ctx, w, opt).value; }) << "\n";
  out << "sigma_R = "
      << guarded([&] { return conductivity(q, Omega, ctx, w, opt).sigma_R; }) << "\n";
  out << "sigma_I = "
      << guarded([&] { return conductivity(q, Omega, ctx, w, opt).sigma_I; }) << "\n";
  out << "M_used = " << er.M_used << "\n";
  out << "pole_flag = " << (er.pole_flag ? "true" : "false") << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plasmon modes, conductivity and Landau damping of a plasma driven "
               "by an external radiation field"};
  app.name("plasmod");
  app.set_version_flag("--version", kVersionString);
  app.require_subcommand(1);

  Overrides o;

  CLI::App* dispersion = app.add_subcommand(
      "dispersion", "solve eps_R(q, Omega) = 0 over a q range and write a CSV table");
  add_common_options(dispersion, o);
  dispersion->add_option("--q-min", o.q_min, "lowest wavenumber [1/m]");
  dispersion->add_option("--q-max", o.q_max, "highest wavenumber [1/m]");
  dispersion->add_option("--steps", o.steps, "number of q values");

  CLI::App* landau = app.add_subcommand(
      "landau", "dispersion sweep focused on the damping columns gamma_closed/gamma_ratio");
  add_common_options(landau, o);
  landau->add_option("--q-min", o.q_min, "lowest wavenumber [1/m]");
  landau->add_option("--q-max", o.q_max, "highest wavenumber [1/m]");
  landau->add_option("--steps", o.steps, "number of q values");

  CLI::App* conductivity_cmd =
      app.add_subcommand("conductivity", "sigma_R/sigma_I tables over Omega or E");
  add_common_options(conductivity_cmd, o);
  std::string vs = "omega";
  std::vector<double> q_list;
  std::vector<double> omega_fixed;
  std::optional<double> range_min, range_max;
  conductivity_cmd->add_option("--vs", vs, "swept variable: omega or E")
      ->check(CLI::IsMember({"omega", "E"}));
  conductivity_cmd->add_option("--q-list", q_list, "wavenumbers, one series each [1/m]");
  conductivity_cmd->add_option("--omega-fixed", omega_fixed,
                               "evaluation frequencies for --vs E [rad/s]");
  conductivity_cmd->add_option("--min", range_min, "sweep range minimum");
  conductivity_cmd->add_option("--max", range_max, "sweep range maximum");
  conductivity_cmd->add_option("--steps", o.steps, "number of swept values");

  CLI::App* eval = app.add_subcommand(
      "eval", "print eps_R, eps_I, deps_dOmega, sigma_R, sigma_I at one (q, Omega)");
  add_common_options(eval, o);
  double eval_q = 0.0, eval_Omega = 0.0;
  eval->add_option("q", eval_q, "wavenumber [1/m]")->required();
  eval->add_option("Omega", eval_Omega, "frequency [rad/s]")->required();

  CLI::App* preset = app.add_subcommand("preset", "run a named built-in sweep");
  add_common_options(preset, o);
  std::string preset_name;
  preset->add_option("name", preset_name, "preset name")
      ->required()
      ->check(CLI::IsMember(presets::names()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (dispersion->parsed() || landau->parsed()) {
      RunConfig cfg = resolve_config(o);
      cfg.sweep.kind = SweepKind::q_sweep;
      if (!o.out && o.config_path.empty())
        cfg.output_path = dispersion->parsed() ? "dispersion.csv" : "landau.csv";
      const SweepResult result = run_sweep(cfg.sweep);
      emit_csv(result, cfg, cfg.output_path);
      if (landau->parsed()) {
        int damped = 0, growth = 0, undamped = 0;
        for (const SweepRow& r : result.rows) {
          if (r.status != RowStatus::converged || std::isnan(r.gamma_ratio)) continue;
          if (r.gamma_ratio < 0.0) ++damped;
          else if (r.gamma_ratio > 0.0) ++growth;
          else ++undamped;
        }
        out << "modes: " << damped << " damped, " << growth << " growing, " << undamped
            << " with vanishing Landau rate\n";
      }
      out << "wrote " << result.rows.size() << " rows to " << cfg.output_path << "\n";
      return 0;
    }
    if (conductivity_cmd->parsed()) {
      RunConfig cfg = resolve_config(o);
      cfg.sweep.kind = (vs == "omega") ? SweepKind::sigma_vs_Omega : SweepKind::sigma_vs_E;
      if (!q_list.empty()) cfg.sweep.q_list = q_list;
      if (cfg.sweep.q_list.empty()) cfg.sweep.q_list = {5000.0, 10000.0, 20000.0};
      if (!omega_fixed.empty()) cfg.sweep.Omega_list = omega_fixed;
      if (cfg.sweep.kind == SweepKind::sigma_vs_E && cfg.sweep.Omega_list.empty())
        cfg.sweep.Omega_list = {cfg.sweep.plasma.omega_p};
      if (range_min) cfg.sweep.min = *range_min;
      if (range_max) cfg.sweep.max = *range_max;
      if (!range_min && !range_max && cfg.sweep.kind == SweepKind::sigma_vs_Omega) {
        cfg.sweep.min = 2e8;
        cfg.sweep.max = 3e10;
      } else if (!range_min && !range_max) {
        cfg.sweep.min = 0.0;
        cfg.sweep.max = 300.0;
      }
      if (!o.out && o.config_path.empty()) cfg.output_path = "conductivity.csv";
      return run_and_emit(cfg, out);
    }
    if (eval->parsed()) {
      const RunConfig cfg = resolve_config(o);
      print_point(out, eval_q, eval_Omega, cfg);
      return 0;
    }
    if (preset->parsed()) {
      RunConfig cfg;
      cfg.sweep = presets::get(preset_name);
      if (o.threads) cfg.sweep.threads = *o.threads;
      if (o.seed) cfg.sweep.seed = *o.seed;
      if (o.max_abs_m)
        cfg.sweep.max_abs_m =
            *o.max_abs_m < 0 ? std::nullopt : std::optional<int>(*o.max_abs_m);
      cfg.output_path = o.out ? *o.out : preset_name + ".csv";
      return run_and_emit(cfg, out);
    }
    err << "error: no subcommand given\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace plasmod
