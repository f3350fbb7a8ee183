#pragma once

#include "plasmod/dielectric.hpp"

namespace plasmod {

// sigma = sigma_R + i sigma_I defined through eps = 1 + (4 pi i / Omega) sigma,
// so sigma_R = (Omega/4pi) eps_I and sigma_I = (Omega/4pi)(1 - eps_R).
// Values are in the Gaussian-form units of that relation (no SI conversion).
struct Conductivity {
  double sigma_R = 0.0;
  double sigma_I = 0.0;
  double q = 0.0;
  double Omega = 0.0;
};

// Inverts the defining relation; used for round-trip validation.
struct DielectricPair {
  double eps_R = 0.0;
  double eps_I = 0.0;
};
[[nodiscard]] DielectricPair reconstruct_dielectric(const Conductivity& sigma);

Conductivity conductivity(double q, double Omega, const DrivenPlasma& ctx,
                          const BesselWeights& w, const EvalOptions& opt = {});
Conductivity conductivity(double q, double Omega, const RadiationField& field,
                          const PlasmaConfig& plasma, const EvalOptions& opt = {});

enum class GammaValidity { ok, assumption_violated };

[[nodiscard]] const char* to_string(GammaValidity v);

// Landau rate of a mode Omega = Omega_R + i*gamma, computed two ways:
//  - gamma_ratio  = -eps_I / (d eps_R / dOmega) at Omega_R (reference route);
//  - gamma_closed = -(m_e/2kT)^{3/2} (sqrt(pi)/q^3)
//                     [sum_m J_m^2 l_m exp(-m_e (l_m/q)^2/2kT)]
//                   / [sum_m J_m^2 l_m^{-3}],
//    which drops higher orders in 1/l_m. The e^{-eps_gamma/kT} factors cancel
//    between numerator and denominator, so gamma_closed never touches the
//    field suppression factor.
// validity is ok only while |gamma| < 0.1 |Omega_R| for both routes.
struct LandauGamma {
  double gamma_closed = 0.0;  // rad/s
  double gamma_ratio = 0.0;   // rad/s
  double Omega_R = 0.0;       // rad/s
  GammaValidity validity = GammaValidity::ok;
};

LandauGamma landau_gamma(double q, double Omega_R, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt = {});
LandauGamma landau_gamma(double q, double Omega_R, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt = {});

}  // namespace plasmod
