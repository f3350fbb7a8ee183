#pragma once

#include <string>
#include <vector>

#include "plasmod/sweep.hpp"

namespace plasmod::presets {

// Ready-made sweep definitions, one per study shipped with the tool:
//   disp-left    dispersion over q, one series per radiation frequency
//   disp-right   dispersion over q, one series per photon-number cap
//   ecamp-left   mode frequency over E at a seeded random q
//   ecamp-right  same, one series per photon-number cap
//   disp2        dispersion over q for omega_p in {1e10, 1e11, 6e11}
//   1e10a/b/c    dispersion families at omega_p = 1e11 / 1e10 / 1e19
//   variandoE    dispersion over q, one series per field amplitude
//   qtest-left   eps_R at every found root along a q sweep
//   qtest-right  raw eps_R(Omega) slice at fixed q = 210
//   sigreal      sigma_R over Omega, one series per q
//   sigme        sigma_I over E at fixed Omega, one series per q
//   sigidifo     sigma_I over E at nearby Omega values, fixed q
[[nodiscard]] std::vector<std::string> names();
[[nodiscard]] SweepSpec get(const std::string& name);  // throws std::invalid_argument

}  // namespace plasmod::presets
