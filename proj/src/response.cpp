#include "plasmod/response.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sum_kernels.hpp"

namespace plasmod {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kDegenerateDenominator = 1e-300;
constexpr double kValidityRatio = 0.1;  // |gamma| < 0.1 |Omega_R| keeps the split valid

}  // namespace

const char* to_string(GammaValidity v) {
  return v == GammaValidity::ok ? "ok" : "assumption_violated";
}

DielectricPair reconstruct_dielectric(const Conductivity& sigma) {
  const double a = sigma.Omega / kFourPi;
  DielectricPair eps;
  eps.eps_R = 1.0 - sigma.sigma_I / a;
  eps.eps_I = sigma.sigma_R / a;
  return eps;
}

Conductivity conductivity(double q, double Omega, const DrivenPlasma& ctx,
                          const BesselWeights& w, const EvalOptions& opt) {
  if (!(q > 0.0)) throw std::domain_error("conductivity: q must be > 0");
  if (Omega == 0.0) throw std::domain_error("conductivity: Omega must be nonzero");

  const double a = Omega / kFourPi;
  Conductivity s;
  s.q = q;
  s.Omega = Omega;
  s.sigma_R = a * eps_imag(q, Omega, ctx, w, opt).value;
  s.sigma_I = a * (1.0 - eps_real(q, Omega, ctx, w, opt).value);
  return s;
}

LandauGamma landau_gamma(double q, double Omega_R, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt) {
  if (!(q > 0.0)) throw std::domain_error("landau_gamma: q must be > 0");
  if (!std::isfinite(Omega_R))
    throw std::invalid_argument("landau_gamma: Omega_R must be finite");

  const double omega = ctx.field.omega;
  const double c = 1.0 / (2.0 * ctx.v_th_sq * q * q);  // m_e/(2 kT q^2)
  int top = w.order;
  if (opt.max_abs_m) top = std::min(top, *opt.max_abs_m);

  // The field suppression factor cancels between the two sums, so neither
  // carries it.
  double num = 0.0;  // sum_m J_m^2 l_m exp(-c l_m^2)
  double den = 0.0;  // sum_m J_m^2 / l_m^3
  const double w0 = w.weight(0);
  if (w0 != 0.0) {
    if (Omega_R == 0.0)
      throw std::domain_error("landau_gamma: lambda_m = 0 in the denominator");
    num += w0 * detail::lambda_exp_term(Omega_R, c);
    den += w0 * detail::inv_cube(Omega_R);
  }
  for (int m = 1; m <= top; ++m) {
    const double wm = w.weight(m);
    if (wm == 0.0) continue;
    const double lp = Omega_R + m * omega;
    const double lm = Omega_R - m * omega;
    if (lp == 0.0 || lm == 0.0)
      throw std::domain_error("landau_gamma: lambda_m = 0 in the denominator");
    num += wm * (detail::lambda_exp_term(lp, c) + detail::lambda_exp_term(lm, c));
    den += wm * (detail::inv_cube(lp) + detail::inv_cube(lm));
  }
  if (std::abs(den) < kDegenerateDenominator)
    throw std::domain_error("landau_gamma: degenerate denominator sum");

  const double prefactor =
      std::pow(1.0 / (2.0 * ctx.v_th_sq), 1.5) * std::sqrt(std::numbers::pi) / (q * q * q);

  LandauGamma g;
  g.Omega_R = Omega_R;
  g.gamma_closed = -prefactor * num / den;
  g.gamma_ratio = -eps_imag(q, Omega_R, ctx, w, opt).value /
                  d_eps_real_dOmega(q, Omega_R, ctx, w, opt).value;
  const double bound = kValidityRatio * std::abs(Omega_R);
  g.validity = (std::abs(g.gamma_closed) < bound && std::abs(g.gamma_ratio) < bound)
                   ? GammaValidity::ok
                   : GammaValidity::assumption_violated;
  return g;
}

Conductivity conductivity(double q, double Omega, const RadiationField& field,
                          const PlasmaConfig& plasma, const EvalOptions& opt) {
  const DrivenPlasma ctx = make_context(field, plasma);
  return conductivity(q, Omega, ctx, weights_for(q, ctx, opt), opt);
}

LandauGamma landau_gamma(double q, double Omega_R, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt) {
  const DrivenPlasma ctx = make_context(field, plasma);
  return landau_gamma(q, Omega_R, ctx, weights_for(q, ctx, opt), opt);
}

}  // namespace plasmod
