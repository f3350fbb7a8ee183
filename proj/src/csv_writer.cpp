#include "plasmod/csv_writer.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "plasmod/version.hpp"

namespace plasmod {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string to_csv(const SweepResult& result, const RunConfig& config) {
  std::string s;
  s += "# ";
  s += kVersionString;
  s += "\n";
  s += "# sigma columns are in the Gaussian-form units of eps = 1 + (4*pi*i/Omega)*sigma\n";
  s += "# (no SI conversion). At a converged mode eps_R = 0, so there sigma_I = Omega/(4*pi).\n";
  s += "# config (feed the uncommented lines back in as a config file to reproduce):\n";
  {
    std::istringstream echo(emit_config_echo(config));
    std::string line;
    while (std::getline(echo, line)) s += "#   " + line + "\n";
  }
  s += "# units: q [1/m]; omega_p,omega_rad,Omega,Omega_R,gamma_* [rad/s]; kT [J]; "
       "E_amp [V/m]; eps_*,residual [dimensionless]; deps_dOmega [s/rad]\n";
  s += "series,swept,omega_p,kT,E_amp,omega_rad,q,m_max,Omega,Omega_R,eps_R,eps_I,"
       "deps_dOmega,sigma_R,sigma_I,gamma_closed,gamma_ratio,residual,M_used,"
       "iterations,status\n";
  for (const SweepRow& r : result.rows) {
    s += r.series;
    s += ',';
    s += format_double(r.swept);
    s += ',';
    s += format_double(r.omega_p);
    s += ',';
    s += format_double(r.kT);
    s += ',';
    s += format_double(r.E_amp);
    s += ',';
    s += format_double(r.omega_rad);
    s += ',';
    s += format_double(r.q);
    s += ',';
    s += std::to_string(r.m_max);
    s += ',';
    s += format_double(r.Omega);
    s += ',';
    s += format_double(r.Omega_R);
    s += ',';
    s += format_double(r.eps_R);
    s += ',';
    s += format_double(r.eps_I);
    s += ',';
    s += format_double(r.deps_dOmega);
    s += ',';
    s += format_double(r.sigma_R);
    s += ',';
    s += format_double(r.sigma_I);
    s += ',';
    s += format_double(r.gamma_closed);
    s += ',';
    s += format_double(r.gamma_ratio);
    s += ',';
    s += format_double(r.residual);
    s += ',';
    s += std::to_string(r.M_used);
    s += ',';
    s += std::to_string(r.iterations);
    s += ',';
    s += to_string(r.status);
    s += '\n';
  }
  return s;
}

void emit_csv(const SweepResult& result, const RunConfig& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  const std::string doc = to_csv(result, config);
  out.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  out.flush();
  if (!out.good()) throw std::runtime_error("write failed for output file: " + path);
}

}  // namespace plasmod
