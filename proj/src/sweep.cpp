#include "plasmod/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "plasmod/version.hpp"

namespace plasmod {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double linspace_at(double lo, double hi, int steps, int i) {
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate_spec(const SweepSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("SweepSpec: steps must be >= 2");
  if (!(spec.min < spec.max)) throw std::invalid_argument("SweepSpec: min must be < max");
  spec.plasma.validate();
  spec.field.validate();
}

// One output curve: a parameter assignment plus the per-row recipe.
struct Series {
  enum class Kind { mode_over_q, mode_over_E, eps_slice, sigma_over_omega, sigma_over_E };
  Kind kind = Kind::mode_over_q;
  std::string label;
  PlasmaConfig plasma;
  RadiationField field;
  std::optional<int> m_cap;
  double q = 0.0;            // fixed wavenumber where the sweep is not over q
  double Omega_fixed = 0.0;  // sigma_over_E evaluation frequency
};

void echo_params(SweepRow& row, const Series& s) {
  row.series = s.label;
  row.omega_p = s.plasma.omega_p;
  row.kT = s.plasma.kT;
  row.E_amp = s.field.E_amp;
  row.omega_rad = s.field.omega;
  row.q = s.q;
  row.m_max = s.m_cap ? *s.m_cap : -1;
  row.Omega = kNaN;
  row.Omega_R = kNaN;
  row.eps_R = kNaN;
  row.eps_I = kNaN;
  row.deps_dOmega = kNaN;
  row.sigma_R = kNaN;
  row.sigma_I = kNaN;
  row.gamma_closed = kNaN;
  row.gamma_ratio = kNaN;
  row.residual = kNaN;
}

RowStatus map_status(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return RowStatus::converged;
    case SolveStatus::no_root: return RowStatus::no_root;
    case SolveStatus::pole_rejected: return RowStatus::pole_rejected;
  }
  return RowStatus::error;
}

SweepRow make_row(const SweepSpec& spec, const Series& s, double swept) {
  SweepRow row;
  Series actual = s;
  if (s.kind == Series::Kind::mode_over_E || s.kind == Series::Kind::sigma_over_E)
    actual.field.E_amp = swept;
  if (s.kind == Series::Kind::mode_over_q) actual.q = swept;

  echo_params(row, actual);
  row.swept = swept;

  EvalOptions opt;
  opt.tail_tol = spec.tail_tol;
  opt.max_abs_m = actual.m_cap;

  const DrivenPlasma ctx = make_context(actual.field, actual.plasma);
  const BesselWeights w = weights_for(actual.q, ctx, opt);
  const BracketPolicy pol = resolve_policy(spec.policy, actual.plasma);

  switch (actual.kind) {
    case Series::Kind::mode_over_q:
    case Series::Kind::mode_over_E: {
      const ModeSolution sol = find_mode_ctx(actual.q, ctx, w, pol, opt);
      row.status = map_status(sol.status);
      row.M_used = sol.M_used;
      row.iterations = sol.iterations;
      if (sol.status != SolveStatus::converged) break;
      row.Omega = row.Omega_R = sol.Omega_R;
      row.residual = sol.residual;
      row.eps_R = eps_real(actual.q, sol.Omega_R, ctx, w, opt).value;
      row.deps_dOmega = d_eps_real_dOmega(actual.q, sol.Omega_R, ctx, w, opt).value;
      if (actual.q > 0.0) {
        row.eps_I = eps_imag(actual.q, sol.Omega_R, ctx, w, opt).value;
        const Conductivity sig = conductivity(actual.q, sol.Omega_R, ctx, w, opt);
        row.sigma_R = sig.sigma_R;
        row.sigma_I = sig.sigma_I;
        try {
          const LandauGamma g = landau_gamma(actual.q, sol.Omega_R, ctx, w, opt);
          row.gamma_closed = g.gamma_closed;
          row.gamma_ratio = g.gamma_ratio;
        } catch (const std::domain_error&) {
          // degenerate denominator: gammas stay NaN, the mode row survives
        }
      }
      break;
    }
    case Series::Kind::eps_slice: {
      row.Omega = swept;
      row.status = RowStatus::evaluated;
      const DielectricValue er = eps_real(actual.q, swept, ctx, w, opt);
      row.eps_R = er.value;
      row.M_used = er.M_used;
      row.deps_dOmega = d_eps_real_dOmega(actual.q, swept, ctx, w, opt).value;
      if (actual.q > 0.0) row.eps_I = eps_imag(actual.q, swept, ctx, w, opt).value;
      break;
    }
    case Series::Kind::sigma_over_omega:
    case Series::Kind::sigma_over_E: {
      const double Omega =
          actual.kind == Series::Kind::sigma_over_omega ? swept : actual.Omega_fixed;
      row.Omega = Omega;
      row.status = RowStatus::evaluated;
      const DielectricValue er = eps_real(actual.q, Omega, ctx, w, opt);
      row.eps_R = er.value;
      row.M_used = er.M_used;
      row.eps_I = eps_imag(actual.q, Omega, ctx, w, opt).value;
      const Conductivity sig = conductivity(actual.q, Omega, ctx, w, opt);
      row.sigma_R = sig.sigma_R;
      row.sigma_I = sig.sigma_I;
      break;
    }
  }
  return row;
}

void run_rows(const SweepSpec& spec, const std::vector<Series>& series,
              const std::vector<double>& swept_values, std::vector<SweepRow>& rows) {
  const int per_series = static_cast<int>(swept_values.size());
  const int total = per_series * static_cast<int>(series.size());
  rows.resize(static_cast<size_t>(total));

  auto job = [&](int idx) {
    const Series& s = series[static_cast<size_t>(idx / per_series)];
    const double swept = swept_values[static_cast<size_t>(idx % per_series)];
    try {
      rows[static_cast<size_t>(idx)] = make_row(spec, s, swept);
    } catch (const std::exception&) {
      SweepRow row;
      echo_params(row, s);
      row.swept = swept;
      row.status = RowStatus::error;
      rows[static_cast<size_t>(idx)] = row;
    }
  };

  int threads = spec.threads;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, total));
  if (threads == 1) {
    for (int i = 0; i < total; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) job(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::vector<double> swept_grid(const SweepSpec& spec) {
  std::vector<double> v(static_cast<size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i)
    v[static_cast<size_t>(i)] = linspace_at(spec.min, spec.max, spec.steps, i);
  return v;
}

SweepResult finish(const SweepSpec& spec, const std::vector<Series>& series,
                   const std::vector<double>& swept_values) {
  SweepResult result;
  result.spec = spec;
  result.version = kVersionString;
  run_rows(spec, series, swept_values, result.rows);
  return result;
}

}  // namespace

const char* to_string(SweepKind k) {
  switch (k) {
    case SweepKind::q_sweep: return "q_sweep";
    case SweepKind::E_sweep: return "E_sweep";
    case SweepKind::omegap_family: return "omegap_family";
    case SweepKind::m_study: return "m_study";
    case SweepKind::residual_scan: return "residual_scan";
    case SweepKind::sigma_vs_E: return "sigma_vs_E";
    case SweepKind::sigma_vs_Omega: return "sigma_vs_Omega";
  }
  return "unknown";
}

std::optional<SweepKind> sweep_kind_from(const std::string& name) {
  for (SweepKind k : {SweepKind::q_sweep, SweepKind::E_sweep, SweepKind::omegap_family,
                      SweepKind::m_study, SweepKind::residual_scan, SweepKind::sigma_vs_E,
                      SweepKind::sigma_vs_Omega}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::converged: return "converged";
    case RowStatus::no_root: return "no_root";
    case RowStatus::pole_rejected: return "pole_rejected";
    case RowStatus::evaluated: return "evaluated";
    case RowStatus::error: return "error";
  }
  return "unknown";
}

double seeded_uniform(std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
  return lo + (hi - lo) * u;
}

namespace {

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

SweepResult run_q_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  std::vector<Series> series;
  Series base;
  base.kind = Series::Kind::mode_over_q;
  base.plasma = spec.plasma;
  base.field = spec.field;
  base.m_cap = spec.max_abs_m;

  if (spec.kind == SweepKind::omegap_family && !spec.omega_p_list.empty()) {
    for (double wp : spec.omega_p_list) {
      Series s = base;
      s.plasma.omega_p = wp;
      s.label = "omega_p=" + fmt_short(wp);
      series.push_back(s);
    }
  } else if (spec.kind == SweepKind::m_study && !spec.m_list.empty()) {
    for (int m : spec.m_list) {
      Series s = base;
      if (m >= 0) s.m_cap = m;
      s.label = m >= 0 ? "m_max=" + std::to_string(m) : "m_max=full";
      series.push_back(s);
    }
  } else if (!spec.omega_rad_list.empty()) {
    for (double wr : spec.omega_rad_list) {
      Series s = base;
      s.field.omega = wr;
      s.label = "omega_rad=" + fmt_short(wr);
      series.push_back(s);
    }
  } else if (!spec.E_list.empty()) {
    for (double E : spec.E_list) {
      Series s = base;
      s.field.E_amp = E;
      s.label = "E=" + fmt_short(E);
      series.push_back(s);
    }
  } else {
    base.label = "modes";
    series.push_back(base);
  }
  return finish(spec, series, swept_grid(spec));
}

SweepResult run_E_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  SweepSpec resolved = spec;
  if (spec.random_q)
    resolved.q_fixed = seeded_uniform(spec.seed, spec.q_rand_min, spec.q_rand_max);

  std::vector<Series> series;
  Series base;
  base.kind = Series::Kind::mode_over_E;
  base.plasma = resolved.plasma;
  base.field = resolved.field;
  base.m_cap = resolved.max_abs_m;
  base.q = resolved.q_fixed;

  if (!resolved.m_list.empty()) {
    for (int m : resolved.m_list) {
      Series s = base;
      if (m >= 0) s.m_cap = m;
      s.label = m >= 0 ? "m_max=" + std::to_string(m) : "m_max=full";
      series.push_back(s);
    }
  } else {
    base.label = "q=" + fmt_short(resolved.q_fixed);
    series.push_back(base);
  }
  return finish(resolved, series, swept_grid(resolved));
}

SweepResult run_residual_scan(const SweepSpec& spec) {
  validate_spec(spec);

  // Mode rows over q first, then one raw eps_R(Omega) slice per listed q.
  std::vector<Series> mode_series;
  Series modes;
  modes.kind = Series::Kind::mode_over_q;
  modes.plasma = spec.plasma;
  modes.field = spec.field;
  modes.m_cap = spec.max_abs_m;
  modes.label = "modes";
  mode_series.push_back(modes);

  SweepResult result;
  result.spec = spec;
  result.version = kVersionString;
  run_rows(spec, mode_series, swept_grid(spec), result.rows);

  if (!spec.q_list.empty()) {
    const BracketPolicy pol = resolve_policy(spec.policy, spec.plasma);
    std::vector<double> omega_grid(static_cast<size_t>(spec.steps));
    for (int i = 0; i < spec.steps; ++i)
      omega_grid[static_cast<size_t>(i)] =
          linspace_at(pol.Omega_lo, pol.Omega_hi, spec.steps, i);

    std::vector<Series> slices;
    for (double qs : spec.q_list) {
      Series s;
      s.kind = Series::Kind::eps_slice;
      s.plasma = spec.plasma;
      s.field = spec.field;
      s.m_cap = spec.max_abs_m;
      s.q = qs;
      s.label = "eps_slice_q=" + fmt_short(qs);
      slices.push_back(s);
    }
    std::vector<SweepRow> slice_rows;
    run_rows(spec, slices, omega_grid, slice_rows);
    result.rows.insert(result.rows.end(), slice_rows.begin(), slice_rows.end());
  }
  return result;
}

SweepResult run_sigma_sweep(const SweepSpec& spec) {
  validate_spec(spec);
  if (spec.q_list.empty())
    throw std::invalid_argument("sigma sweep: q_list must not be empty");

  std::vector<Series> series;
  if (spec.kind == SweepKind::sigma_vs_Omega) {
    for (double qs : spec.q_list) {
      Series s;
      s.kind = Series::Kind::sigma_over_omega;
      s.plasma = spec.plasma;
      s.field = spec.field;
      s.m_cap = spec.max_abs_m;
      s.q = qs;
      s.label = "q=" + fmt_short(qs);
      series.push_back(s);
    }
  } else {
    if (spec.Omega_list.empty())
      throw std::invalid_argument("sigma_vs_E: Omega_list must not be empty");
    for (double qs : spec.q_list) {
      for (double W : spec.Omega_list) {
        Series s;
        s.kind = Series::Kind::sigma_over_E;
        s.plasma = spec.plasma;
        s.field = spec.field;
        s.m_cap = spec.max_abs_m;
        s.q = qs;
        s.Omega_fixed = W;
        s.label = "q=" + fmt_short(qs) + ";Omega=" + fmt_short(W);
        series.push_back(s);
      }
    }
  }
  return finish(spec, series, swept_grid(spec));
}

SweepResult run_sweep(const SweepSpec& spec) {
  switch (spec.kind) {
    case SweepKind::q_sweep:
    case SweepKind::omegap_family:
    case SweepKind::m_study:
      return run_q_sweep(spec);
    case SweepKind::E_sweep:
      return run_E_sweep(spec);
    case SweepKind::residual_scan:
      return run_residual_scan(spec);
    case SweepKind::sigma_vs_E:
    case SweepKind::sigma_vs_Omega:
      return run_sigma_sweep(spec);
  }
  throw std::invalid_argument("run_sweep: unknown sweep kind");
}

}  // namespace plasmod
