#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "plasmod/dielectric.hpp"

using namespace plasmod;

namespace {

PlasmaConfig discharge_plasma() {
  PlasmaConfig p;
  p.omega_p = 6e11;
  p.kT = 1.6e-19;
  return p;
}

}  // namespace

TEST_CASE("eps_real: q = 0 keeps only the m = 0 photon channel") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const auto c = derive_coupling(f, p);
  for (const double Omega : {2e11, 6e11, 1.7e12}) {
    const double expected = 1.0 - p.omega_p * p.omega_p * c.exp_factor / (Omega * Omega);
    CHECK(eps_real(0.0, Omega, f, p).value == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("eps_real: cold-plasma zero at q = 0, Omega = omega_p, E = 0") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  CHECK(std::abs(eps_real(0.0, p.omega_p, f, p).value) <= 1e-14);
}

TEST_CASE("eps_real: vanishes at the thermal dispersion root (E = 0)") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double root = oracles::bohm_gross_root(p.omega_p, p.kT / p.m_e, 20000.0);
  CHECK(root == doctest::Approx(6.0018e11).epsilon(1e-4));
  CHECK(std::abs(eps_real(20000.0, root, f, p).value) <= 1e-12);
}

TEST_CASE("eps_real: E = 0 collapses to the thermal closed form") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  oracles::Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const double q = rng.uniform(0.0, 20000.0);
    const double Omega = rng.uniform(0.3 * p.omega_p, 2.5 * p.omega_p);
    const double il2 = 1.0 / (Omega * Omega);
    const double expected =
        1.0 - p.omega_p * p.omega_p * (il2 + (3.0 * q * q * v2) * il2 * il2);
    CHECK(eps_real(q, Omega, f, p).value == doctest::Approx(expected).epsilon(1e-15));
  }
}

TEST_CASE("eps_real: even in Omega and in q, bit for bit") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{25.0, 3e7};
  oracles::Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    const double q = rng.uniform(100.0, 20000.0);
    const double Omega = rng.uniform(0.3 * p.omega_p, 2.5 * p.omega_p);
    const double base = eps_real(q, Omega, f, p).value;
    CHECK(eps_real(q, -Omega, f, p).value == base);
    CHECK(eps_real(-q, Omega, f, p).value == base);
  }
}

TEST_CASE("eps_real: photon-sum tail already converged at the default order") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  for (const double q : {5000.0, 20000.0}) {
    const double at_default = eps_real(q, 6.1e11, f, p).value;
    EvalOptions finer;
    finer.tail_tol = 1e-15;  // forces a larger truncation order
    const double at_finer = eps_real(q, 6.1e11, f, p, finer).value;
    CHECK(at_default == doctest::Approx(at_finer).epsilon(1e-10));
  }
}

TEST_CASE("eps_real: max_abs_m = 0 reproduces the single-channel curve") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  const auto c = derive_coupling(f, p);
  const double v2 = p.kT / p.m_e;
  EvalOptions m0;
  m0.max_abs_m = 0;

  const double q = 800.0;  // q*gamma0 ~ 1.56, solidly multiphoton otherwise
  const double Omega = 5.5e11;
  const double J0 = oracles::bessel_j_series(0, q * c.gamma0);
  const double il2 = 1.0 / (Omega * Omega);
  const double expected = 1.0 - p.omega_p * p.omega_p * c.exp_factor * (J0 * J0) *
                                    (il2 + (3.0 * q * q * v2) * il2 * il2);
  const DielectricValue got = eps_real(q, Omega, f, p, m0);
  CHECK(got.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(got.M_used == 0);
  CHECK(got.n_terms == 1);
}

TEST_CASE("eps_real: pole guard flags, exact pole throws") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};

  // lambda_{-3} = Omega - 3*omega within the guard band
  const double near_pole = 3.0 * f.omega + 1e-12 * f.omega;
  const DielectricValue flagged = eps_real(800.0, near_pole, f, p);
  CHECK(flagged.pole_flag);
  CHECK(std::abs(flagged.value) > 1e6);

  CHECK_THROWS_AS((void)eps_real(800.0, 3.0 * f.omega, f, p), std::domain_error);
}

TEST_CASE("dielectric: non-finite inputs rejected") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  CHECK_THROWS_AS((void)eps_real(std::nan(""), 6e11, f, p), std::invalid_argument);
  CHECK_THROWS_AS((void)eps_real(100.0, INFINITY, f, p), std::invalid_argument);
  CHECK_THROWS_AS((void)eps_imag(100.0, std::nan(""), f, p), std::invalid_argument);
  CHECK_THROWS_AS((void)d_eps_real_dOmega(INFINITY, 6e11, f, p), std::invalid_argument);
}

TEST_CASE("eps_imag: zero-field closed form at a representable exponent") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  const double v2 = p.kT / p.m_e;
  const double q = 5e4;
  const double Omega = 6e11;  // exponent ~ -410, no underflow
  const double expected = oracles::eps_imag_cold(p.omega_p, v2, q, Omega);
  CHECK(expected != 0.0);
  CHECK(eps_imag(q, Omega, f, p).value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("eps_imag: deep exponents underflow to exactly zero") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  // (Omega/q)^2 / (2 vth^2) ~ 2562 at q = 20000, Omega = 6e11
  CHECK(eps_imag(20000.0, 6e11, f, p).value == 0.0);
}

TEST_CASE("eps_imag: odd in Omega, bit for bit") {
  const PlasmaConfig p = discharge_plasma();
  for (const double E : {0.0, 10.0}) {
    const RadiationField f{E, 3e7};
    oracles::Rng rng(33);
    for (int i = 0; i < 30; ++i) {
      const double q = rng.uniform(1e4, 6e4);
      const double Omega = rng.uniform(1e11, 1e12);
      CHECK(eps_imag(q, -Omega, f, p).value == -eps_imag(q, Omega, f, p).value);
    }
  }
}

TEST_CASE("eps_imag: rejects q <= 0") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  CHECK_THROWS_AS((void)eps_imag(0.0, 6e11, f, p), std::domain_error);
  CHECK_THROWS_AS((void)eps_imag(-100.0, 6e11, f, p), std::domain_error);
}

TEST_CASE("d_eps_real_dOmega: closed form at q = 0, E = 0") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{0.0, 3e7};
  for (const double Omega : {2e11, 6e11, 1.5e12}) {
    const double expected = 2.0 * p.omega_p * p.omega_p / (Omega * Omega * Omega);
    CHECK(d_eps_real_dOmega(0.0, Omega, f, p).value ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("d_eps_real_dOmega: matches centered finite differences") {
  const PlasmaConfig p = discharge_plasma();
  oracles::Rng rng(34);
  for (int i = 0; i < 40; ++i) {
    const double E = (i % 3 == 0) ? 0.0 : ((i % 3 == 1) ? 10.0 : 100.0);
    const RadiationField f{E, 3e7};
    const double q = rng.uniform(0.0, 20000.0);
    const double Omega = rng.uniform(0.5 * p.omega_p, 2.5 * p.omega_p);
    const double h = 1e-6 * Omega;
    const double fd = oracles::central_diff(
        [&](double W) { return eps_real(q, W, f, p).value; }, Omega, h);
    const double an = d_eps_real_dOmega(q, Omega, f, p).value;
    CHECK(an == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("d_eps_real_dOmega: odd in Omega, bit for bit") {
  const PlasmaConfig p = discharge_plasma();
  const RadiationField f{10.0, 3e7};
  oracles::Rng rng(35);
  for (int i = 0; i < 30; ++i) {
    const double q = rng.uniform(0.0, 20000.0);
    const double Omega = rng.uniform(0.3 * p.omega_p, 2.5 * p.omega_p);
    CHECK(d_eps_real_dOmega(q, -Omega, f, p).value ==
          -d_eps_real_dOmega(q, Omega, f, p).value);
  }
}
