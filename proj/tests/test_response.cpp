#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "plasmod/modes.hpp"
#include "plasmod/response.hpp"

using namespace plasmod;

namespace {

PlasmaConfig discharge_plasma() {
  PlasmaConfig p;
  p.omega_p = 6e11;
  p.kT = 1.6e-19;
  return p;
}

}  // namespace

TEST_CASE("conductivity: dielectric round trip at random points") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  oracles::Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const double q = rng.uniform(100.0, 60000.0);
    const double Omega = rng.uniform(0.5 * p.omega_p, 2.5 * p.omega_p);
    const Conductivity sig = conductivity(q, Omega, f, p);
    const DielectricPair eps = reconstruct_dielectric(sig);
    const double eR = eps_real(q, Omega, f, p).value;
    const double eI = eps_imag(q, Omega, f, p).value;
    CHECK(std::abs(eps.eps_R - eR) <= 1e-12 * std::max(1.0, std::abs(eR)));
    if (eI == 0.0) {
      CHECK(eps.eps_I == 0.0);
    } else {
      CHECK(std::abs(eps.eps_I - eI) <= 1e-12 * std::abs(eI));
    }
  }
}

TEST_CASE("conductivity: sigma_R vanishes with eps_I") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  // deep-exponent point: eps_I underflows to exactly 0
  const Conductivity sig = conductivity(20000.0, 6e11, f, p);
  CHECK(eps_imag(20000.0, 6e11, f, p).value == 0.0);
  CHECK(sig.sigma_R == 0.0);
}

TEST_CASE("conductivity: sigma_I equals Omega/4pi at a converged mode") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const ModeSolution sol = find_mode(15000.0, f, p, BracketPolicy{});
  REQUIRE(sol.status == SolveStatus::converged);
  const Conductivity sig = conductivity(15000.0, sol.Omega_R, f, p);
  const double expected = sol.Omega_R / (4.0 * std::numbers::pi);
  CHECK(sig.sigma_I == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("conductivity: small Omega changes move sigma_I comparably") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const double q = 10000.0;
  const double base = conductivity(q, 6e11, f, p).sigma_I;
  const double moved = conductivity(q, 6e11 * 1.01, f, p).sigma_I;
  CHECK(std::abs(moved - base) <= 0.1 * std::abs(base));
}

TEST_CASE("conductivity: domain errors") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  CHECK_THROWS_AS((void)conductivity(0.0, 6e11, f, p), std::domain_error);
  CHECK_THROWS_AS((void)conductivity(-5.0, 6e11, f, p), std::domain_error);
  CHECK_THROWS_AS((void)conductivity(100.0, 0.0, f, p), std::domain_error);
}

TEST_CASE("landau_gamma: zero-field closed form at a representable point") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  const double q = 4.5e4;  // exponent ~ -508: nonzero but strongly damped
  const double Omega = oracles::bohm_gross_root(p.omega_p, v2, q);

  const LandauGamma g = landau_gamma(q, Omega, f, p);
  const double expected = oracles::landau_gamma_cold(v2, q, Omega);
  CHECK(expected != 0.0);
  CHECK(g.gamma_closed == doctest::Approx(expected).epsilon(1e-12));
  CHECK(g.gamma_closed < 0.0);  // damping, not growth
  CHECK(g.validity == GammaValidity::ok);
}

TEST_CASE("landau_gamma: ratio route differs by the dropped 1/lambda orders") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  const double q = 4.5e4;
  const double Omega = oracles::bohm_gross_root(p.omega_p, v2, q);

  const LandauGamma g = landau_gamma(q, Omega, f, p);
  // gamma_ratio = gamma_closed / (1 + 6 q^2 v^2 / Omega^2) exactly at E = 0
  const double x = 6.0 * q * q * v2 / (Omega * Omega);
  CHECK(g.gamma_ratio == doctest::Approx(g.gamma_closed / (1.0 + x)).epsilon(1e-10));
  const double rel = std::abs(g.gamma_ratio - g.gamma_closed) / std::abs(g.gamma_closed);
  CHECK(rel == doctest::Approx(x / (1.0 + x)).epsilon(1e-6));
}

TEST_CASE("landau_gamma: routes agree where the dominant balance holds") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  // 3 q^2 v^2 / Omega^2 < 1e-3 over the whole sweep range here; both routes
  // underflow to exactly zero, which is the agreement the balance predicts.
  for (const double q : {2000.0, 10000.0, 20000.0}) {
    const double Omega = oracles::bohm_gross_root(p.omega_p, v2, q);
    CHECK(3.0 * q * q * v2 / (Omega * Omega) < 1e-3);
    const LandauGamma g = landau_gamma(q, Omega, f, p);
    CHECK(std::abs(g.gamma_ratio - g.gamma_closed) <=
          1e-3 * std::max(std::abs(g.gamma_ratio), std::abs(g.gamma_closed)));
  }
}

TEST_CASE("landau_gamma: closed form never reads the field suppression factor") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{30.0, 3e7};
  const double q = 4.5e4;
  const double Omega = 6.01e11;

  const DrivenPlasma ctx = make_context(f, p);
  DrivenPlasma forced = ctx;
  forced.coupling.exp_factor = 1.0;

  const BesselWeights w = weights_for(q, ctx);
  const LandauGamma a = landau_gamma(q, Omega, ctx, w);
  const LandauGamma b = landau_gamma(q, Omega, forced, w);
  CHECK(a.gamma_closed == b.gamma_closed);  // bit-identical
  CHECK(a.gamma_closed != 0.0);
}

TEST_CASE("landau_gamma: strong damping trips the validity flag") {
  PlasmaConfig p = discharge_plasma();
  p.omega_p = 1e10;
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  const double q = 20000.0;  // q vth / Omega ~ 0.6: Landau damping is violent
  const double Omega = oracles::bohm_gross_root(p.omega_p, v2, q);
  const LandauGamma g = landau_gamma(q, Omega, f, p);
  CHECK(std::abs(g.gamma_closed) > 0.1 * Omega);
  CHECK(g.validity == GammaValidity::assumption_violated);
}

TEST_CASE("landau_gamma: domain errors") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  CHECK_THROWS_AS((void)landau_gamma(0.0, 6e11, f, p), std::domain_error);
  CHECK_THROWS_AS((void)landau_gamma(-10.0, 6e11, f, p), std::domain_error);
  CHECK_THROWS_AS((void)landau_gamma(100.0, std::nan(""), f, p), std::invalid_argument);
}
