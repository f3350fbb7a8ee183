#pragma once

#include "plasmod/dielectric.hpp"

namespace plasmod {

enum class SolveStatus { converged, no_root, pole_rejected };

[[nodiscard]] const char* to_string(SolveStatus s);

// One plasmon mode: the accepted root of eps_R(q, Omega) = 0.
struct ModeSolution {
  double q = 0.0;                 // 1/m
  double Omega_R = 0.0;           // rad/s; NaN unless converged
  double residual = 0.0;          // |eps_R(q, Omega_R)|; NaN unless converged
  int M_used = 0;
  int iterations = 0;             // bisection iterations of the accepted root
  SolveStatus status = SolveStatus::no_root;
};

// Scan window and acceptance thresholds for the root search.
// Omega_lo/Omega_hi <= 0 act as "auto": resolve_policy fills them with
// [1e-3, 3] * omega_p.
struct BracketPolicy {
  double Omega_lo = 0.0;       // rad/s
  double Omega_hi = 0.0;       // rad/s
  int n_scan = 2000;           // >= 100 grid points over the window
  double residual_tol = 1e-8;  // accept root only if |eps_R| <= residual_tol
  double rel_tol = 1e-12;      // relative Omega width at which bisection stops

  void validate() const;

  friend bool operator==(const BracketPolicy&, const BracketPolicy&) = default;
};

[[nodiscard]] BracketPolicy resolve_policy(const BracketPolicy& policy,
                                           const PlasmaConfig& plasma);

// Scan eps_R on the policy grid, bisect every sign-change cell starting from
// the top of the window, and return the largest root passing the residual
// filter (the plasmon branch). Sign changes whose bisection limit still has
// |eps_R| > residual_tol are rejected as pole artifacts.
[[nodiscard]] ModeSolution find_mode(double q, const RadiationField& field,
                                     const PlasmaConfig& plasma,
                                     const BracketPolicy& policy,
                                     const EvalOptions& opt = {});

// Same search restricted to photon numbers |m| <= m_max.
[[nodiscard]] ModeSolution find_mode_fixed_m(double q, int m_max,
                                             const RadiationField& field,
                                             const PlasmaConfig& plasma,
                                             const BracketPolicy& policy,
                                             const EvalOptions& opt = {});

// Core search over a prebuilt context + weight table (one table per q).
[[nodiscard]] ModeSolution find_mode_ctx(double q, const DrivenPlasma& ctx,
                                         const BesselWeights& w,
                                         const BracketPolicy& policy,
                                         const EvalOptions& opt = {});

}  // namespace plasmod
