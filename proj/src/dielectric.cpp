#include "plasmod/dielectric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sum_kernels.hpp"

namespace plasmod {

namespace {

constexpr double kPoleGuardRel = 1e-9;

void require_finite(double q, double Omega) {
  if (!std::isfinite(q) || !std::isfinite(Omega))
    throw std::invalid_argument("dielectric: q and Omega must be finite");
}

int effective_order(const BesselWeights& w, const EvalOptions& opt) {
  int top = w.order;
  if (opt.max_abs_m) {
    if (*opt.max_abs_m < 0)
      throw std::invalid_argument("dielectric: max_abs_m must be >= 0");
    top = std::min(top, *opt.max_abs_m);
  }
  return top;
}

// |lambda| below the guard only flags the value; an exact zero under a
// nonzero weight cannot be summed at all.
void check_pole(double lambda, double guard, DielectricValue& out) {
  if (lambda == 0.0)
    throw std::domain_error("dielectric: lambda_m = m*omega + Omega is exactly 0");
  if (std::abs(lambda) < guard) out.pole_flag = true;
}

}  // namespace

DielectricValue eps_real(double q, double Omega, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt) {
  require_finite(q, Omega);
  const double omega = ctx.field.omega;
  const double tq = 3.0 * q * q * ctx.v_th_sq;
  const double guard = kPoleGuardRel * std::max(omega, std::abs(Omega));
  const int top = effective_order(w, opt);

  DielectricValue out;
  out.M_used = top;

  double sum = 0.0;
  const double w0 = w.weight(0);
  if (w0 != 0.0) {
    check_pole(Omega, guard, out);
    sum += w0 * detail::even_pole_term(Omega, tq);
    ++out.n_terms;
  }
  for (int m = 1; m <= top; ++m) {
    const double wm = w.weight(m);
    if (wm == 0.0) continue;
    const double lp = Omega + m * omega;
    const double lm = Omega - m * omega;
    check_pole(lp, guard, out);
    check_pole(lm, guard, out);
    sum += wm * (detail::even_pole_term(lp, tq) + detail::even_pole_term(lm, tq));
    out.n_terms += 2;
  }

  const double wp2 = ctx.plasma.omega_p * ctx.plasma.omega_p;
  out.value = 1.0 - wp2 * ctx.coupling.exp_factor * sum;
  return out;
}

DielectricValue eps_imag(double q, double Omega, const DrivenPlasma& ctx,
                         const BesselWeights& w, const EvalOptions& opt) {
  require_finite(q, Omega);
  if (!(q > 0.0)) throw std::domain_error("eps_imag: q must be > 0");
  const double omega = ctx.field.omega;
  const double c = 1.0 / (2.0 * ctx.v_th_sq * q * q);  // m_e/(2 kT q^2)
  const int top = effective_order(w, opt);

  DielectricValue out;
  out.M_used = top;

  double sum = 0.0;
  const double w0 = w.weight(0);
  if (w0 != 0.0) {
    sum += w0 * detail::lambda_exp_term(Omega, c);
    ++out.n_terms;
  }
  for (int m = 1; m <= top; ++m) {
    const double wm = w.weight(m);
    if (wm == 0.0) continue;
    sum += wm * (detail::lambda_exp_term(Omega + m * omega, c) +
                 detail::lambda_exp_term(Omega - m * omega, c));
    out.n_terms += 2;
  }

  const double wp2 = ctx.plasma.omega_p * ctx.plasma.omega_p;
  const double prefactor = std::sqrt(std::numbers::pi / 2.0) *
                           std::pow(1.0 / ctx.v_th_sq, 1.5) * wp2 / (q * q * q);
  out.value = prefactor * ctx.coupling.exp_factor * sum;
  return out;
}

DielectricValue d_eps_real_dOmega(double q, double Omega, const DrivenPlasma& ctx,
                                  const BesselWeights& w, const EvalOptions& opt) {
  require_finite(q, Omega);
  const double omega = ctx.field.omega;
  const double td = 12.0 * q * q * ctx.v_th_sq;
  const double guard = kPoleGuardRel * std::max(omega, std::abs(Omega));
  const int top = effective_order(w, opt);

  DielectricValue out;
  out.M_used = top;

  double sum = 0.0;
  const double w0 = w.weight(0);
  if (w0 != 0.0) {
    check_pole(Omega, guard, out);
    sum += w0 * detail::odd_pole_term(Omega, td);
    ++out.n_terms;
  }
  for (int m = 1; m <= top; ++m) {
    const double wm = w.weight(m);
    if (wm == 0.0) continue;
    const double lp = Omega + m * omega;
    const double lm = Omega - m * omega;
    check_pole(lp, guard, out);
    check_pole(lm, guard, out);
    sum += wm * (detail::odd_pole_term(lp, td) + detail::odd_pole_term(lm, td));
    out.n_terms += 2;
  }

  const double wp2 = ctx.plasma.omega_p * ctx.plasma.omega_p;
  out.value = wp2 * ctx.coupling.exp_factor * sum;
  return out;
}

BesselWeights weights_for(double q, const DrivenPlasma& ctx, const EvalOptions& opt) {
  return bessel_weights(std::abs(q) * ctx.coupling.gamma0, opt.tail_tol);
}

DielectricValue eps_real(double q, double Omega, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt) {
  const DrivenPlasma ctx = make_context(field, plasma);
  return eps_real(q, Omega, ctx, weights_for(q, ctx, opt), opt);
}

DielectricValue eps_imag(double q, double Omega, const RadiationField& field,
                         const PlasmaConfig& plasma, const EvalOptions& opt) {
  const DrivenPlasma ctx = make_context(field, plasma);
  return eps_imag(q, Omega, ctx, weights_for(q, ctx, opt), opt);
}

DielectricValue d_eps_real_dOmega(double q, double Omega, const RadiationField& field,
                                  const PlasmaConfig& plasma, const EvalOptions& opt) {
  const DrivenPlasma ctx = make_context(field, plasma);
  return d_eps_real_dOmega(q, Omega, ctx, weights_for(q, ctx, opt), opt);
}

}  // namespace plasmod
