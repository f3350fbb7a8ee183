#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "plasmod/modes.hpp"

using namespace plasmod;

namespace {

PlasmaConfig discharge_plasma() {
  PlasmaConfig p;
  p.omega_p = 6e11;
  p.kT = 1.6e-19;
  return p;
}

BracketPolicy auto_policy() { return BracketPolicy{}; }

}  // namespace

TEST_CASE("find_mode: q = 0 root matches the field-suppressed closed form") {
  const PlasmaConfig p = discharge_plasma();
  for (const double E : {0.0, 10.0, 100.0, 300.0}) {
    const RadiationField f{E, 3e7};
    const ModeSolution sol = find_mode(0.0, f, p, auto_policy());
    REQUIRE(sol.status == SolveStatus::converged);
    const double expected =
        oracles::zero_q_root(p.omega_p, E, f.omega, p.m_e, p.e_charge, p.kT);
    CHECK(sol.Omega_R == doctest::Approx(expected).epsilon(1e-10));
    CHECK(sol.residual <= 1e-8);
  }
}

TEST_CASE("find_mode: thermal dispersion at zero field") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  for (const double q : {500.0, 5000.0, 20000.0}) {
    const ModeSolution sol = find_mode(q, f, p, auto_policy());
    REQUIRE(sol.status == SolveStatus::converged);
    CHECK(sol.Omega_R ==
          doctest::Approx(oracles::bohm_gross_root(p.omega_p, v2, q)).epsilon(1e-10));
  }
}

TEST_CASE("find_mode: accepted roots pair as +-Omega") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const ModeSolution sol = find_mode(12000.0, f, p, auto_policy());
  REQUIRE(sol.status == SolveStatus::converged);
  CHECK(std::abs(eps_real(12000.0, -sol.Omega_R, f, p).value) <= 1e-8);
}

TEST_CASE("find_mode: even in q") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const ModeSolution plus = find_mode(9000.0, f, p, auto_policy());
  const ModeSolution minus = find_mode(-9000.0, f, p, auto_policy());
  REQUIRE(plus.status == SolveStatus::converged);
  REQUIRE(minus.status == SolveStatus::converged);
  CHECK(plus.Omega_R == minus.Omega_R);
}

TEST_CASE("find_mode_fixed_m: m_max = 0 at E = 0 equals the full solve") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const ModeSolution full = find_mode(15000.0, f, p, auto_policy());
  const ModeSolution capped = find_mode_fixed_m(15000.0, 0, f, p, auto_policy());
  REQUIRE(full.status == SolveStatus::converged);
  REQUIRE(capped.status == SolveStatus::converged);
  CHECK(full.Omega_R == capped.Omega_R);
}

TEST_CASE("find_mode_fixed_m: m_max = 0 with field matches the J0-weighted root") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const auto c = derive_coupling(f, p);
  const double v2 = p.kT / p.m_e;

  const double q = 800.0;  // x = q*gamma0 ~ 1.56, away from J0 zeros
  const double J0 = oracles::bessel_j_series(0, q * c.gamma0);
  const double A = p.omega_p * p.omega_p * (J0 * J0) * c.exp_factor;
  const double expected = oracles::biquadratic_root(A, 3.0 * q * q * v2);

  const ModeSolution sol = find_mode_fixed_m(q, 0, f, p, auto_policy());
  REQUIRE(sol.status == SolveStatus::converged);
  CHECK(sol.Omega_R == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("find_mode_fixed_m: allowed frequency range narrows with more photons") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const BracketPolicy pol = auto_policy();

  auto range_over_q = [&](std::optional<int> m_cap) {
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i <= 40; ++i) {
      const double q = 20000.0 * i / 40.0;
      const ModeSolution sol = m_cap ? find_mode_fixed_m(q, *m_cap, f, p, pol)
                                     : find_mode(q, f, p, pol);
      if (sol.status != SolveStatus::converged) continue;
      lo = std::min(lo, sol.Omega_R);
      hi = std::max(hi, sol.Omega_R);
    }
    REQUIRE(hi > 0.0);
    return hi - lo;
  };

  const double r0 = range_over_q(0);
  const double r2 = range_over_q(2);
  const double rfull = range_over_q(std::nullopt);
  CHECK(r0 >= r2 - 1e-6 * p.omega_p);
  CHECK(r2 >= rfull - 1e-6 * p.omega_p);
  CHECK(r0 > 2.0 * rfull);  // the single-channel curve dips far deeper
}

TEST_CASE("find_mode: tightening rel_tol moves the root by less than the contract") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  BracketPolicy loose = auto_policy();
  loose.rel_tol = 1e-10;
  BracketPolicy tight = loose;
  tight.rel_tol = 1e-11;
  const ModeSolution a = find_mode(12000.0, f, p, loose);
  const ModeSolution b = find_mode(12000.0, f, p, tight);
  REQUIRE(a.status == SolveStatus::converged);
  REQUIRE(b.status == SolveStatus::converged);
  CHECK(std::abs(a.Omega_R - b.Omega_R) <= 10.0 * loose.rel_tol * a.Omega_R);
}

TEST_CASE("find_mode: window excluding the mode reports no_root") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  BracketPolicy pol;
  pol.Omega_lo = 2.0 * p.omega_p;  // plasmon sits near omega_p, below the window
  pol.Omega_hi = 3.0 * p.omega_p;
  const ModeSolution sol = find_mode(0.0, f, p, pol);
  CHECK(sol.status == SolveStatus::no_root);
  CHECK(std::isnan(sol.Omega_R));
}

TEST_CASE("find_mode: residual filter rejections surface as pole_rejected") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  BracketPolicy pol;
  pol.residual_tol = 1e-30;  // unreachable at bisection resolution
  const ModeSolution sol = find_mode(15000.0, f, p, pol);
  CHECK(sol.status == SolveStatus::pole_rejected);
}

TEST_CASE("find_mode: converged residuals revalidate against eps_real") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  for (const double q : {0.0, 4000.0, 16000.0}) {
    const ModeSolution sol = find_mode(q, f, p, auto_policy());
    REQUIRE(sol.status == SolveStatus::converged);
    CHECK(std::abs(eps_real(q, sol.Omega_R, f, p).value) <= 1e-8);
    CHECK(sol.residual <= 1e-8);
  }
}

TEST_CASE("BracketPolicy: invariants enforced") {
  const PlasmaConfig p = discharge_plasma();
  BracketPolicy pol;
  pol.Omega_lo = 1.0;
  pol.Omega_hi = 0.5;
  CHECK_THROWS_AS(pol.validate(), std::invalid_argument);
  pol = BracketPolicy{};
  pol.n_scan = 10;
  CHECK_THROWS_AS((void)resolve_policy(pol, p), std::invalid_argument);
}
