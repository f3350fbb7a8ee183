#include "plasmod/params.hpp"

#include <cmath>
#include <stdexcept>

namespace plasmod {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void PlasmaConfig::validate() const {
  require(std::isfinite(omega_p) && omega_p > 0.0, "PlasmaConfig: omega_p must be > 0");
  require(std::isfinite(kT) && kT > 0.0, "PlasmaConfig: kT must be > 0");
  require(std::isfinite(m_e) && m_e > 0.0, "PlasmaConfig: m_e must be > 0");
  require(std::isfinite(e_charge) && e_charge > 0.0, "PlasmaConfig: e_charge must be > 0");
}

void RadiationField::validate() const {
  require(std::isfinite(E_amp) && E_amp >= 0.0, "RadiationField: E_amp must be >= 0");
  require(std::isfinite(omega) && omega > 0.0, "RadiationField: omega must be > 0");
}

DerivedCoupling derive_coupling(const RadiationField& field, const PlasmaConfig& plasma) {
  field.validate();
  plasma.validate();

  const double w = field.omega;
  const double E = field.E_amp;
  DerivedCoupling c;
  c.gamma0 = plasma.e_charge * E / (plasma.m_e * w * w);
  c.gamma1 = plasma.e_charge * plasma.e_charge * E * E / (8.0 * plasma.m_e * w * w * w);
  c.eps_gamma = 2.0 * c.gamma1 * w;
  c.exp_factor = (E == 0.0) ? 1.0 : std::exp(-c.eps_gamma / plasma.kT);
  return c;
}

double thermal_speed_sq(const PlasmaConfig& plasma) {
  plasma.validate();
  return plasma.kT / plasma.m_e;
}

DrivenPlasma make_context(const RadiationField& field, const PlasmaConfig& plasma) {
  DrivenPlasma ctx;
  ctx.plasma = plasma;
  ctx.field = field;
  ctx.coupling = derive_coupling(field, plasma);
  ctx.v_th_sq = plasma.kT / plasma.m_e;
  return ctx;
}

}  // namespace plasmod
