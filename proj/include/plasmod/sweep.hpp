#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plasmod/modes.hpp"
#include "plasmod/response.hpp"

namespace plasmod {

enum class SweepKind {
  q_sweep,         // modes over q; optional series per omega_rad or E
  E_sweep,         // modes over E at fixed (or seeded random) q
  omegap_family,   // modes over q, one series per omega_p
  m_study,         // modes over q, one series per photon-number cap
  residual_scan,   // eps_R at the found roots + raw eps_R(Omega) slices
  sigma_vs_E,      // conductivity over E at fixed (q, Omega) pairs
  sigma_vs_Omega,  // conductivity over Omega, one series per q
};

[[nodiscard]] const char* to_string(SweepKind k);
[[nodiscard]] std::optional<SweepKind> sweep_kind_from(const std::string& name);

struct SweepSpec {
  SweepKind kind = SweepKind::q_sweep;
  double min = 0.0;       // swept-variable range
  double max = 20000.0;
  int steps = 201;        // >= 2

  PlasmaConfig plasma;
  RadiationField field;
  BracketPolicy policy;   // window <= 0 means auto [1e-3, 3]*omega_p
  double tail_tol = kDefaultTailTol;
  std::optional<int> max_abs_m;

  std::vector<double> omega_p_list;    // omegap_family series
  std::vector<double> omega_rad_list;  // q_sweep series per radiation frequency
  std::vector<double> E_list;          // q_sweep series per field amplitude
  std::vector<int> m_list;             // m_study / E_sweep series; -1 = full sum
  std::vector<double> q_list;          // sigma sweeps; residual-scan slice wavenumbers
  std::vector<double> Omega_list;      // sigma_vs_E evaluation frequencies

  double q_fixed = 0.0;       // E_sweep / sigma_vs_E wavenumber
  bool random_q = false;      // E_sweep: draw q_fixed once from seed
  double q_rand_min = 0.0;
  double q_rand_max = 20000.0;
  std::uint64_t seed = 0;

  int threads = 0;  // rows computed in parallel; 0 = hardware concurrency

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

enum class RowStatus { converged, no_root, pole_rejected, evaluated, error };

[[nodiscard]] const char* to_string(RowStatus s);

// One output record. Quantities that do not apply to the row kind (or to a
// failed solve) are NaN. The parameter columns echo the exact inputs so any
// row can be recomputed in isolation.
struct SweepRow {
  std::string series;
  double swept = 0.0;

  double omega_p = 0.0;
  double kT = 0.0;
  double E_amp = 0.0;
  double omega_rad = 0.0;
  double q = 0.0;
  int m_max = -1;  // -1 = full sum

  double Omega = 0.0;  // evaluation frequency (= Omega_R for mode rows)
  double Omega_R = 0.0;
  double eps_R = 0.0;
  double eps_I = 0.0;
  double deps_dOmega = 0.0;
  double sigma_R = 0.0;
  double sigma_I = 0.0;
  double gamma_closed = 0.0;
  double gamma_ratio = 0.0;
  double residual = 0.0;
  int M_used = 0;
  int iterations = 0;
  RowStatus status = RowStatus::evaluated;
};

struct SweepResult {
  SweepSpec spec;
  std::string version;
  std::vector<SweepRow> rows;  // series-major, sorted by swept value inside a series
};

// Row failures never abort a sweep; they land in the row status.
SweepResult run_q_sweep(const SweepSpec& spec);       // q_sweep, omegap_family, m_study
SweepResult run_E_sweep(const SweepSpec& spec);       // E_sweep
SweepResult run_residual_scan(const SweepSpec& spec); // residual_scan
SweepResult run_sigma_sweep(const SweepSpec& spec);   // sigma_vs_E, sigma_vs_Omega
SweepResult run_sweep(const SweepSpec& spec);         // dispatch on spec.kind

// The seeded draw used by random-q mode (uniform in [lo, hi], reproducible
// independent of platform distribution implementations).
[[nodiscard]] double seeded_uniform(std::uint64_t seed, double lo, double hi);

}  // namespace plasmod
