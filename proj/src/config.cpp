#include "plasmod/config.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "plasmod/csv_writer.hpp"

namespace plasmod {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  double out = 0.0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  const auto r = std::from_chars(first, last, out);
  if (r.ec != std::errc() || r.ptr != last)
    throw ConfigError(line, "malformed number for '" + key + "': " + v);
  return out;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
  long long out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError(line, "malformed integer for '" + key + "': " + v);
  return out;
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& key) {
  std::uint64_t out = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError(line, "malformed unsigned integer for '" + key + "': " + v);
  return out;
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(line, "malformed boolean for '" + key + "': " + v);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> parts;
  if (trim(v).empty()) return parts;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  return parts;
}

std::vector<double> parse_double_list(const std::string& v, int line, const std::string& key) {
  std::vector<double> out;
  for (const auto& p : split_list(v)) out.push_back(parse_double(p, line, key));
  return out;
}

std::vector<int> parse_int_list(const std::string& v, int line, const std::string& key) {
  std::vector<int> out;
  for (const auto& p : split_list(v))
    out.push_back(static_cast<int>(parse_int(p, line, key)));
  return out;
}

struct LineOf {
  std::map<std::string, int> lines;
  void note(const std::string& key, int line) { lines[key] = line; }
  [[nodiscard]] int at(const std::string& key) const {
    const auto it = lines.find(key);
    return it == lines.end() ? 0 : it->second;
  }
};

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + message
                                  : "config: " + message),
      line_(line) {}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  SweepSpec& sw = cfg.sweep;

  bool has_omega_p = false, has_kT = false, has_TeV = false;
  bool has_E = false, has_omega_rad = false;
  double T_eV = 0.0;
  LineOf where;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "plasma" && section != "field" && section != "solver" &&
          section != "sweep")
        throw ConfigError(lineno, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected 'key = value', got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError(lineno, "key '" + key + "' appears before any section");
    where.note(section + "." + key, lineno);

    if (section == "plasma") {
      if (key == "omega_p") { sw.plasma.omega_p = parse_double(value, lineno, key); has_omega_p = true; }
      else if (key == "kT") { sw.plasma.kT = parse_double(value, lineno, key); has_kT = true; }
      else if (key == "T_eV") { T_eV = parse_double(value, lineno, key); has_TeV = true; }
      else if (key == "m_e") sw.plasma.m_e = parse_double(value, lineno, key);
      else if (key == "e_charge") sw.plasma.e_charge = parse_double(value, lineno, key);
      else throw ConfigError(lineno, "unknown key '" + key + "' in [plasma]");
    } else if (section == "field") {
      if (key == "E_amp") { sw.field.E_amp = parse_double(value, lineno, key); has_E = true; }
      else if (key == "omega_rad") { sw.field.omega = parse_double(value, lineno, key); has_omega_rad = true; }
      else throw ConfigError(lineno, "unknown key '" + key + "' in [field]");
    } else if (section == "solver") {
      if (key == "omega_lo") sw.policy.Omega_lo = parse_double(value, lineno, key);
      else if (key == "omega_hi") sw.policy.Omega_hi = parse_double(value, lineno, key);
      else if (key == "n_scan") sw.policy.n_scan = static_cast<int>(parse_int(value, lineno, key));
      else if (key == "residual_tol") sw.policy.residual_tol = parse_double(value, lineno, key);
      else if (key == "rel_tol") sw.policy.rel_tol = parse_double(value, lineno, key);
      else if (key == "tail_tol") sw.tail_tol = parse_double(value, lineno, key);
      else if (key == "max_abs_m") {
        const long long m = parse_int(value, lineno, key);
        if (m < -1) throw ConfigError(lineno, "max_abs_m must be >= -1 (-1 = full sum)");
        sw.max_abs_m = m < 0 ? std::nullopt : std::optional<int>(static_cast<int>(m));
      } else throw ConfigError(lineno, "unknown key '" + key + "' in [solver]");
    } else {  // sweep
      if (key == "kind") {
        const auto k = sweep_kind_from(value);
        if (!k) throw ConfigError(lineno, "unknown sweep kind: " + value);
        sw.kind = *k;
      }
      else if (key == "min") sw.min = parse_double(value, lineno, key);
      else if (key == "max") sw.max = parse_double(value, lineno, key);
      else if (key == "steps") sw.steps = static_cast<int>(parse_int(value, lineno, key));
      else if (key == "q_fixed") sw.q_fixed = parse_double(value, lineno, key);
      else if (key == "random_q") sw.random_q = parse_bool(value, lineno, key);
      else if (key == "seed") sw.seed = parse_u64(value, lineno, key);
      else if (key == "q_rand_min") sw.q_rand_min = parse_double(value, lineno, key);
      else if (key == "q_rand_max") sw.q_rand_max = parse_double(value, lineno, key);
      else if (key == "threads") sw.threads = static_cast<int>(parse_int(value, lineno, key));
      else if (key == "omega_p_list") sw.omega_p_list = parse_double_list(value, lineno, key);
      else if (key == "omega_rad_list") sw.omega_rad_list = parse_double_list(value, lineno, key);
      else if (key == "E_list") sw.E_list = parse_double_list(value, lineno, key);
      else if (key == "m_list") sw.m_list = parse_int_list(value, lineno, key);
      else if (key == "q_list") sw.q_list = parse_double_list(value, lineno, key);
      else if (key == "Omega_list") sw.Omega_list = parse_double_list(value, lineno, key);
      else if (key == "out") cfg.output_path = value;
      else throw ConfigError(lineno, "unknown key '" + key + "' in [sweep]");
    }
  }

  if (!has_omega_p) throw ConfigError(0, "missing required key omega_p in [plasma]");
  if (!has_kT && !has_TeV)
    throw ConfigError(0, "missing required key kT (or T_eV) in [plasma]");
  if (has_kT && has_TeV)
    throw ConfigError(where.at("plasma.T_eV"), "give either kT or T_eV, not both");
  if (!has_E) throw ConfigError(0, "missing required key E_amp in [field]");
  if (!has_omega_rad) throw ConfigError(0, "missing required key omega_rad in [field]");
  if (has_TeV) sw.plasma.kT = T_eV * constants::joule_per_ev;

  auto fail = [&](const std::string& key, const std::string& msg) {
    throw ConfigError(where.at(key), msg);
  };
  if (!(sw.plasma.omega_p > 0.0)) fail("plasma.omega_p", "omega_p must be > 0");
  if (!(sw.plasma.kT > 0.0)) fail(has_TeV ? "plasma.T_eV" : "plasma.kT", "kT must be > 0");
  if (!(sw.plasma.m_e > 0.0)) fail("plasma.m_e", "m_e must be > 0");
  if (!(sw.plasma.e_charge > 0.0)) fail("plasma.e_charge", "e_charge must be > 0");
  if (!(sw.field.E_amp >= 0.0)) fail("field.E_amp", "E_amp must be >= 0");
  if (!(sw.field.omega > 0.0)) fail("field.omega_rad", "omega_rad must be > 0");
  if (sw.steps < 2) fail("sweep.steps", "steps must be >= 2");
  if (!(sw.min < sw.max)) fail("sweep.min", "min must be < max");
  if (sw.policy.n_scan < 100) fail("solver.n_scan", "n_scan must be >= 100");
  if (!(sw.policy.residual_tol > 0.0)) fail("solver.residual_tol", "residual_tol must be > 0");
  if (!(sw.policy.rel_tol > 0.0 && sw.policy.rel_tol <= 1e-2))
    fail("solver.rel_tol", "rel_tol must lie in (0, 1e-2]");
  if (!(sw.tail_tol > 0.0 && sw.tail_tol <= 1e-6))
    fail("solver.tail_tol", "tail_tol must lie in (0, 1e-6]");
  if (sw.policy.Omega_lo > 0.0 && sw.policy.Omega_hi > 0.0 &&
      !(sw.policy.Omega_hi > sw.policy.Omega_lo))
    fail("solver.omega_hi", "omega_hi must exceed omega_lo");

  return cfg;
}

std::string emit_config_echo(const RunConfig& cfg) {
  const SweepSpec& sw = cfg.sweep;
  std::string s;
  s += "[plasma]\n";
  s += "omega_p = " + format_double(sw.plasma.omega_p) + "\n";
  s += "kT = " + format_double(sw.plasma.kT) + "\n";
  s += "m_e = " + format_double(sw.plasma.m_e) + "\n";
  s += "e_charge = " + format_double(sw.plasma.e_charge) + "\n";
  s += "\n[field]\n";
  s += "E_amp = " + format_double(sw.field.E_amp) + "\n";
  s += "omega_rad = " + format_double(sw.field.omega) + "\n";
  s += "\n[solver]\n";
  s += "omega_lo = " + format_double(sw.policy.Omega_lo) + "  # 0 = auto 1e-3*omega_p\n";
  s += "omega_hi = " + format_double(sw.policy.Omega_hi) + "  # 0 = auto 3*omega_p\n";
  s += "n_scan = " + std::to_string(sw.policy.n_scan) + "\n";
  s += "residual_tol = " + format_double(sw.policy.residual_tol) + "\n";
  s += "rel_tol = " + format_double(sw.policy.rel_tol) + "\n";
  s += "tail_tol = " + format_double(sw.tail_tol) + "\n";
  s += "max_abs_m = " + std::to_string(sw.max_abs_m ? *sw.max_abs_m : -1) + "\n";
  s += "\n[sweep]\n";
  s += "kind = " + std::string(to_string(sw.kind)) + "\n";
  s += "min = " + format_double(sw.min) + "\n";
  s += "max = " + format_double(sw.max) + "\n";
  s += "steps = " + std::to_string(sw.steps) + "\n";
  s += "q_fixed = " + format_double(sw.q_fixed) + "\n";
  s += "random_q = " + std::string(sw.random_q ? "true" : "false") + "\n";
  s += "seed = " + std::to_string(sw.seed) + "\n";
  s += "q_rand_min = " + format_double(sw.q_rand_min) + "\n";
  s += "q_rand_max = " + format_double(sw.q_rand_max) + "\n";
  s += "threads = " + std::to_string(sw.threads) + "\n";
  s += "omega_p_list = " + join_doubles(sw.omega_p_list) + "\n";
  s += "omega_rad_list = " + join_doubles(sw.omega_rad_list) + "\n";
  s += "E_list = " + join_doubles(sw.E_list) + "\n";
  s += "m_list = " + join_ints(sw.m_list) + "\n";
  s += "q_list = " + join_doubles(sw.q_list) + "\n";
  s += "Omega_list = " + join_doubles(sw.Omega_list) + "\n";
  s += "out = " + cfg.output_path + "\n";
  return s;
}

}  // namespace plasmod
