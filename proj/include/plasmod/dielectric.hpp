#pragma once

#include <optional>

#include "plasmod/bessel.hpp"
#include "plasmod/params.hpp"

namespace plasmod {

// Result of one dielectric-function evaluation. pole_flag marks that some
// summed lambda_m = m*omega + Omega fell inside the pole guard; the value is
// still the computed one (possibly enormous) so that callers can filter on
// the residual instead of aborting.
struct DielectricValue {
  double value = 0.0;
  int M_used = 0;     // photon-sum truncation actually applied
  int n_terms = 0;    // nonzero-weight terms summed
  bool pole_flag = false;
};

struct EvalOptions {
  double tail_tol = kDefaultTailTol;
  std::optional<int> max_abs_m;  // cap |m| (photon-number studies); unset = full sum
};

// Real part:
//   eps_R = 1 - wp^2 e^{-eps_gamma/kT} sum_m J_m(q g0)^2 [1/l_m^2 + 3 q^2 vth^2 / l_m^4],
// with l_m = m*omega + Omega. Even in Omega and in q (bit-exact: the +-m
// branches are accumulated pairwise).
DielectricValue eps_real(double q, double Omega, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt = {});

// Imaginary part (q > 0):
//   eps_I = sqrt(pi/2) (m_e/kT)^{3/2} (wp^2/q^3) e^{-eps_gamma/kT}
//           sum_m J_m(q g0)^2 l_m exp(-m_e (l_m/q)^2 / (2 kT)).
// Odd in Omega. Exponents are assembled in log space once they get small
// enough that direct products would hit subnormals; exponents <= -745
// evaluate to exactly 0.
DielectricValue eps_imag(double q, double Omega, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt = {});

// Analytic Omega-derivative of eps_R:
//   d(eps_R)/dOmega = + wp^2 e^{-eps_gamma/kT}
//                     sum_m J_m(q g0)^2 [2/l_m^3 + 12 q^2 vth^2 / l_m^5].
DielectricValue d_eps_real_dOmega(double q, double Omega, const DrivenPlasma& ctx,
                                  const BesselWeights& w, const EvalOptions& opt = {});

// Convenience overloads building the context and weight table per call.
DielectricValue eps_real(double q, double Omega, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt = {});
DielectricValue eps_imag(double q, double Omega, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt = {});
DielectricValue d_eps_real_dOmega(double q, double Omega, const RadiationField& field,
                                  const PlasmaConfig& plasma, const EvalOptions& opt = {});

// Weight table for the photon sums at wavenumber q: argument x = |q|*gamma0.
[[nodiscard]] BesselWeights weights_for(double q, const DrivenPlasma& ctx,
                                        const EvalOptions& opt = {});

}  // namespace plasmod
