#pragma once

#include "plasmod/constants.hpp"

namespace plasmod {

// Bulk plasma parameters. omega_p and kT come from the experiment; the
// particle constants default to CODATA 2018 values and may be overridden.
struct PlasmaConfig {
  double omega_p = 0.0;  // natural (plasma) angular frequency, rad/s
  double kT = 0.0;       // thermal energy k_B*T, J
  double m_e = constants::electron_mass;        // kg
  double e_charge = constants::elementary_charge;  // C

  void validate() const;  // throws std::invalid_argument

  friend bool operator==(const PlasmaConfig&, const PlasmaConfig&) = default;
};

// External radiation field in the dipole approximation, linearly polarized.
struct RadiationField {
  double E_amp = 0.0;  // electric field amplitude, V/m (>= 0; 0 = no field)
  double omega = 0.0;  // radiation angular frequency, rad/s (> 0)

  void validate() const;

  friend bool operator==(const RadiationField&, const RadiationField&) = default;
};

// Field-derived coupling constants that enter every photon sum.
struct DerivedCoupling {
  double gamma0 = 0.0;      // quiver displacement e*E/(m_e w^2), m
  double gamma1 = 0.0;      // e^2 E^2 / (8 m_e w^3), J*s
  double eps_gamma = 0.0;   // radiation energy 2*gamma1*w, J
  double exp_factor = 1.0;  // exp(-eps_gamma/kT), in (0, 1]; 1 iff E_amp = 0
};

[[nodiscard]] DerivedCoupling derive_coupling(const RadiationField& field,
                                              const PlasmaConfig& plasma);

// One-dimensional Maxwellian velocity variance <v^2> = kT/m_e, m^2/s^2.
[[nodiscard]] double thermal_speed_sq(const PlasmaConfig& plasma);

// Everything the dielectric sums need, computed once per (field, plasma).
struct DrivenPlasma {
  PlasmaConfig plasma;
  RadiationField field;
  DerivedCoupling coupling;
  double v_th_sq = 0.0;
};

[[nodiscard]] DrivenPlasma make_context(const RadiationField& field,
                                        const PlasmaConfig& plasma);

}  // namespace plasmod
