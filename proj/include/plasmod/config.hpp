#pragma once

#include <stdexcept>
#include <string>

#include "plasmod/sweep.hpp"

namespace plasmod {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

struct RunConfig {
  SweepSpec sweep;  // carries plasma/field/solver settings for the run
  std::string output_path = "out.csv";

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// INI-style text with sections [plasma], [field], [solver], [sweep].
// Required keys: omega_p, kT or T_eV, E_amp, omega_rad. Unknown keys are
// rejected by name; every diagnostic carries the offending line number.
[[nodiscard]] RunConfig parse_config(const std::string& text);

// Full config document (all values, defaults included). Feeding it back to
// parse_config reproduces the RunConfig; emit_csv embeds it in the header.
[[nodiscard]] std::string emit_config_echo(const RunConfig& config);

}  // namespace plasmod
