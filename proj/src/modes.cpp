#include "plasmod/modes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace plasmod {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxBisect = 200;

bool opposite_signs(double a, double b) {
  return a != 0.0 && b != 0.0 && (std::signbit(a) != std::signbit(b));
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::no_root: return "no_root";
    case SolveStatus::pole_rejected: return "pole_rejected";
  }
  return "unknown";
}

void BracketPolicy::validate() const {
  if (!(std::isfinite(Omega_lo) && Omega_lo > 0.0))
    throw std::invalid_argument("BracketPolicy: Omega_lo must be > 0");
  if (!(std::isfinite(Omega_hi) && Omega_hi > Omega_lo))
    throw std::invalid_argument("BracketPolicy: Omega_hi must exceed Omega_lo");
  if (n_scan < 100)
    throw std::invalid_argument("BracketPolicy: n_scan must be >= 100");
  if (!(residual_tol > 0.0))
    throw std::invalid_argument("BracketPolicy: residual_tol must be > 0");
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
    throw std::invalid_argument("BracketPolicy: rel_tol must lie in (0, 1e-2]");
}

BracketPolicy resolve_policy(const BracketPolicy& policy, const PlasmaConfig& plasma) {
  BracketPolicy r = policy;
  if (r.Omega_lo <= 0.0) r.Omega_lo = 1e-3 * plasma.omega_p;
  if (r.Omega_hi <= 0.0) r.Omega_hi = 3.0 * plasma.omega_p;
  r.validate();
  return r;
}

ModeSolution find_mode_ctx(double q, const DrivenPlasma& ctx, const BesselWeights& w,
                           const BracketPolicy& policy, const EvalOptions& opt) {
  if (!std::isfinite(q)) throw std::invalid_argument("find_mode: q must be finite");
  const BracketPolicy pol = resolve_policy(policy, ctx.plasma);

  ModeSolution sol;
  sol.q = q;
  sol.Omega_R = kNaN;
  sol.residual = kNaN;

  // eps_R with an exact lambda_m = 0 hit mapped to NaN so the scan can step
  // over it instead of aborting the whole solve.
  auto eval = [&](double W) -> double {
    try {
      return eps_real(q, W, ctx, w, opt).value;
    } catch (const std::domain_error&) {
      return kNaN;
    }
  };

  const int n = pol.n_scan;
  const double lo = pol.Omega_lo;
  const double span = pol.Omega_hi - pol.Omega_lo;
  std::vector<double> grid(static_cast<size_t>(n));
  std::vector<double> f(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<size_t>(i)] = lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
    f[static_cast<size_t>(i)] = eval(grid[static_cast<size_t>(i)]);
  }

  bool saw_candidate = false;

  auto accept = [&](double root, int iterations) -> bool {
    const DielectricValue at_root = [&] {
      try {
        return eps_real(q, root, ctx, w, opt);
      } catch (const std::domain_error&) {
        DielectricValue bad;
        bad.value = kNaN;
        return bad;
      }
    }();
    if (!(std::abs(at_root.value) <= pol.residual_tol)) return false;
    sol.Omega_R = root;
    sol.residual = std::abs(at_root.value);
    sol.M_used = at_root.M_used;
    sol.iterations = iterations;
    sol.status = SolveStatus::converged;
    return true;
  };

  // Walk cells from the top of the window; the first accepted root is the
  // largest one (the plasmon branch).
  for (int i = n - 2; i >= 0; --i) {
    const double fb = f[static_cast<size_t>(i + 1)];
    if (fb == 0.0) {
      saw_candidate = true;
      if (accept(grid[static_cast<size_t>(i + 1)], 0)) return sol;
      continue;
    }
    const double fa = f[static_cast<size_t>(i)];
    if (std::isnan(fa) || std::isnan(fb)) continue;
    if (!opposite_signs(fa, fb)) continue;

    saw_candidate = true;
    double a = grid[static_cast<size_t>(i)];
    double b = grid[static_cast<size_t>(i + 1)];
    double va = fa;
    int iter = 0;
    while (iter < kMaxBisect) {
      double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;  // interval exhausted at double resolution
      double vm = eval(mid);
      if (std::isnan(vm)) {  // stepped on an exact pole; nudge once
        mid = a + (b - a) * 0.4990234375;
        vm = eval(mid);
        if (std::isnan(vm)) break;
      }
      ++iter;
      if (vm == 0.0) {
        a = b = mid;
        break;
      }
      if (std::signbit(vm) == std::signbit(va)) {
        a = mid;
        va = vm;
      } else {
        b = mid;
      }
      if ((b - a) <= pol.rel_tol * std::abs(mid)) break;
    }
    if (accept(0.5 * (a + b), iter)) return sol;
  }
  if (f[0] == 0.0) {
    saw_candidate = true;
    if (accept(grid[0], 0)) return sol;
  }

  sol.status = saw_candidate ? SolveStatus::pole_rejected : SolveStatus::no_root;
  sol.M_used = opt.max_abs_m ? std::min(w.order, *opt.max_abs_m) : w.order;
  sol.iterations = 0;
  return sol;
}

ModeSolution find_mode(double q, const RadiationField& field, const PlasmaConfig& plasma,
                       const BracketPolicy& policy, const EvalOptions& opt) {
  if (!std::isfinite(q)) throw std::invalid_argument("find_mode: q must be finite");
  const DrivenPlasma ctx = make_context(field, plasma);
  return find_mode_ctx(q, ctx, weights_for(q, ctx, opt), policy, opt);
}

ModeSolution find_mode_fixed_m(double q, int m_max, const RadiationField& field,
                               const PlasmaConfig& plasma, const BracketPolicy& policy,
                               const EvalOptions& opt) {
  if (m_max < 0) throw std::invalid_argument("find_mode_fixed_m: m_max must be >= 0");
  EvalOptions capped = opt;
  capped.max_abs_m = m_max;
  return find_mode(q, field, plasma, policy, capped);
}

}  // namespace plasmod
