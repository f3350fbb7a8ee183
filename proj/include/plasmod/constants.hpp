#pragma once

namespace plasmod::constants {

// CODATA 2018
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double joule_per_ev = 1.602176634e-19;       // J/eV

}  // namespace plasmod::constants
