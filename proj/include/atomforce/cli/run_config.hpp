#pragma once

// Run configuration for the command-line tool: a sectioned key/value file
// (read with CLI11's INI reader) whose keys can be overridden by
// --section.key flags. Every key is declared in one table; unknown keys are
// rejected.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atomforce/analysis.hpp"
#include "atomforce/dispersion_forces.hpp"
#include "atomforce/dynamics.hpp"
#include "atomforce/entanglement_forces.hpp"
#include "atomforce/errors.hpp"
#include "atomforce/model.hpp"
#include "atomforce/quadrature.hpp"
#include "atomforce/units.hpp"

namespace atomforce::cli {

struct KeySpec {
  const char* key;
  const char* help;
};

/// Every accepted key. Values are strings until conversion.
inline const std::vector<KeySpec>& known_keys() {
  static const std::vector<KeySpec> keys = {
      {"atom1.omega_eV", "oscillator frequency of atom 1 (eV)"},
      {"atom1.reduced_mass_eV", "reduced mass of atom 1 (eV), default electron mass"},
      {"atom1.charge_e", "coupling charge of atom 1 in units of e, default 1"},
      {"atom1.total_mass_eV", "total mass of atom 1 (eV), default hydrogen"},
      {"atom1.temperature_K", "internal temperature of atom 1 (K) or zero"},
      {"atom2.omega_eV", "oscillator frequency of atom 2 (eV)"},
      {"atom2.reduced_mass_eV", "reduced mass of atom 2 (eV)"},
      {"atom2.charge_e", "coupling charge of atom 2 in units of e"},
      {"atom2.total_mass_eV", "total mass of atom 2 (eV)"},
      {"atom2.temperature_K", "internal temperature of atom 2 (K) or zero"},
      {"field.temperature_K", "field temperature (K) or zero"},
      {"squeeze.alpha_tilde", "isotropic dimensionless alpha"},
      {"squeeze.beta_tilde", "isotropic dimensionless beta"},
      {"squeeze.alpha_tilde_x", "alpha along x"},
      {"squeeze.alpha_tilde_y", "alpha along y"},
      {"squeeze.alpha_tilde_z", "alpha along z"},
      {"squeeze.beta_tilde_x", "beta along x"},
      {"squeeze.beta_tilde_y", "beta along y"},
      {"squeeze.beta_tilde_z", "beta along z"},
      {"quadrature.eta_ladder", "decreasing UV regulator values (1/eV)"},
      {"quadrature.panel_tol", "relative tolerance"},
      {"quadrature.max_panels", "panel budget"},
      {"quadrature.pole_window_eV", "half-width of the principal-value windows (eV)"},
      {"sweep.z_min_nm", "first separation (nm)"},
      {"sweep.z_max_nm", "last separation (nm)"},
      {"sweep.points", "number of separations"},
      {"sweep.grid", "linear or log"},
      {"output.format", "csv or json"},
      {"output.path", "output file, - for stdout"},
      {"force.components", "comma list: fA,fB,fC,dfC,london,cp,noneq,ent or full"},
      {"force.entanglement_form", "isotropic, nearfield or anisotropic"},
      {"ratio.kind", "noneq or entanglement"},
      {"ratio.omega_over_c_per_um", "Omega/c used by the reference-convention column (1/um)"},
      {"crossover.kind", "entanglement or noneq"},
      {"crossover.prefactor", "solve P (z/nm)^5 = 1 instead of using the configured atoms"},
      {"crossover.z_lo_nm", "lower end of the search bracket (nm)"},
      {"crossover.z_hi_nm", "upper end of the search bracket (nm)"},
      {"trajectory.z0_nm", "initial separation (nm)"},
      {"trajectory.v0_c", "initial velocity (units of c)"},
      {"trajectory.dt_inv_eV", "time step (1/eV)"},
      {"trajectory.t_max_inv_eV", "duration (1/eV)"},
      {"trajectory.z_min_nm", "halting separation (nm)"},
      {"trajectory.components", "force components, or none for free motion"},
  };
  return keys;
}

inline bool is_known_key(const std::string& k) {
  const auto& keys = known_keys();
  return std::any_of(keys.begin(), keys.end(), [&](const KeySpec& s) { return k == s.key; });
}

/// Flat key -> raw value map, in key order (deterministic hashing and echo).
using RawConfig = std::map<std::string, std::string>;

inline RawConfig read_config_stream(std::istream& in) {
  RawConfig raw;
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  for (const auto& it : items) {
    if (it.name == "++" || it.name == "--") continue;
    std::string key = CLI::detail::join(it.parents, ".");
    key = key.empty() ? it.name : key + "." + it.name;
    if (!is_known_key(key)) throw ConfigError("unknown config key '" + key + "'");
    // The INI reader folds a repeated key into one multi-valued item.
    // The INI reader folds a repeated key into one multi-valued item, and
    // splits comma lists the same way; only list keys may carry several values.
    const bool list_key = key == "quadrature.eta_ladder" || key == "force.components" || key == "trajectory.components";
    if (raw.count(key) || (it.inputs.size() > 1 && !list_key)) {
      throw ConfigError("config key '" + key + "' given twice or as a list");
    }
    raw[key] = CLI::detail::join(it.inputs, ",");
  }
  return raw;
}

inline RawConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return read_config_stream(in);
}

// ---------------------------------------------------------------------------
// Typed access with field-attributed errors

class Fields {
 public:
  explicit Fields(const RawConfig& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  double number(const std::string& key) const {
    auto it = raw_.find(key);
    if (it == raw_.end()) throw ConfigError(key + ": required value missing");
    return parse_number(key, it->second);
  }

  double number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

  double positive(const std::string& key) const {
    const double v = number(key);
    if (!(v > 0.0)) throw ConfigError(key + " must be > 0, got " + raw_.at(key));
    return v;
  }

  double positive(const std::string& key, double fallback) const { return has(key) ? positive(key) : fallback; }

  int integer(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double v = number(key);
    if (v != std::floor(v) || std::abs(v) > 2e9) throw ConfigError(key + " must be an integer");
    return static_cast<int>(v);
  }

  std::vector<double> numbers(const std::string& key) const {
    std::vector<double> out;
    auto it = raw_.find(key);
    if (it == raw_.end()) return out;
    std::string s = it->second;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(parse_number(key, tok));
    return out;
  }

  /// Temperature in K or the word "zero".
  InverseTemperature temperature(const std::string& key) const {
    const std::string v = text(key, "zero");
    if (v == "zero" || v == "0") return InverseTemperature::zero();
    const double t = parse_number(key, v);
    if (!(t > 0.0)) throw ConfigError(key + " must be > 0 or 'zero', got " + v);
    return InverseTemperature::finite(units::to_internal_inverse_temperature(t));
  }

 private:
  static double parse_number(const std::string& key, const std::string& s) {
    std::istringstream in(s);
    in.imbue(std::locale::classic());
    double v;
    in >> v;
    if (in.fail() || !(in >> std::ws).eof() || !std::isfinite(v)) {
      throw ConfigError(key + ": expected a number, got '" + s + "'");
    }
    return v;
  }

  const RawConfig& raw_;
};

inline constexpr double hydrogen_total_mass_eV = 938783066.0;

inline AtomSpec atom_from(const Fields& f, const std::string& sec) {
  AtomSpec a;
  a.omega = f.positive(sec + ".omega_eV");
  a.mu = f.positive(sec + ".reduced_mass_eV", units::codata2018.electron_mass);
  const double charge = f.number(sec + ".charge_e", 1.0);
  if (charge == 0.0) throw ConfigError(sec + ".charge_e must be nonzero");
  a.q = units::charge_to_internal(charge);
  a.total_mass = f.positive(sec + ".total_mass_eV", hydrogen_total_mass_eV);
  a.temperature = f.temperature(sec + ".temperature_K");
  return a;
}

inline std::optional<SqueezeState> squeeze_from(const Fields& f, const AtomSpec& atom) {
  const bool iso = f.has("squeeze.alpha_tilde") || f.has("squeeze.beta_tilde");
  const char* axes[] = {"x", "y", "z"};
  bool any_axis = false;
  for (const char* ax : axes) {
    any_axis |= f.has(std::string("squeeze.alpha_tilde_") + ax) || f.has(std::string("squeeze.beta_tilde_") + ax);
  }
  if (!iso && !any_axis) return std::nullopt;
  if (iso && any_axis) throw ConfigError("squeeze: give either alpha_tilde/beta_tilde or per-axis values, not both");
  std::array<double, 3> a{}, b{};
  for (int j = 0; j < 3; ++j) {
    const std::string ax = axes[j];
    a[j] = iso ? f.positive("squeeze.alpha_tilde") : f.positive("squeeze.alpha_tilde_" + ax);
    b[j] = iso ? f.positive("squeeze.beta_tilde") : f.positive("squeeze.beta_tilde_" + ax);
  }
  return entanglement::squeeze_from_tilde(a, b, atom);
}

struct Sweep {
  std::vector<double> z_nm;
};

inline Sweep sweep_from(const Fields& f) {
  Sweep s;
  const double lo = f.positive("sweep.z_min_nm", 1.0);
  const double hi = f.positive("sweep.z_max_nm", lo);
  const int n = f.integer("sweep.points", 1);
  const std::string grid = f.text("sweep.grid", "log");
  if (n < 1) throw ConfigError("sweep.points must be >= 1");
  if (hi < lo) throw ConfigError("sweep.z_max_nm must be >= sweep.z_min_nm");
  if (grid != "log" && grid != "linear") throw ConfigError("sweep.grid must be 'linear' or 'log', got '" + grid + "'");
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    s.z_nm.push_back(grid == "log" ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  return s;
}

inline quadrature::QuadratureSpec quadrature_from(const Fields& f) {
  quadrature::QuadratureSpec q;
  q.eta_ladder = f.numbers("quadrature.eta_ladder");
  q.panel_tol = f.positive("quadrature.panel_tol", q.panel_tol);
  q.max_panels = f.integer("quadrature.max_panels", q.max_panels);
  if (f.has("quadrature.pole_window_eV")) q.pole_window = f.positive("quadrature.pole_window_eV");
  q.validate();
  return q;
}

/// Parses a comma list of component names.
inline forces::ComponentSelection selection_from(const std::string& list, const std::string& form,
                                                 const std::string& key) {
  forces::ComponentSelection s;
  std::string spec = list;
  std::replace(spec.begin(), spec.end(), ',', ' ');
  std::istringstream in(spec);
  std::string tok;
  while (in >> tok) {
    if (tok == "fA") s.fA = true;
    else if (tok == "fB") s.fB = true;
    else if (tok == "fC") s.fC_integral = true;
    else if (tok == "dfC") s.delta_fC = true;
    else if (tok == "london") s.london = true;
    else if (tok == "cp") s.cp_farfield = true;
    else if (tok == "noneq") s.noneq = true;
    else if (tok == "ent") s.entanglement = true;
    else if (tok == "full") s.fA = s.fB = s.fC_integral = s.delta_fC = true;
    else if (tok == "none") continue;
    else throw ConfigError(key + ": unknown component '" + tok + "'");
  }
  if (form == "isotropic") s.entanglement_form = forces::EntanglementForm::isotropic_ladder;
  else if (form == "nearfield") s.entanglement_form = forces::EntanglementForm::isotropic_nearfield;
  else if (form == "anisotropic") s.entanglement_form = forces::EntanglementForm::anisotropic_nearfield;
  else throw ConfigError("force.entanglement_form: unknown form '" + form + "'");
  return s;
}

struct OutputSpec {
  std::string format = "csv";
  std::string path = "-";
};

inline OutputSpec output_from(const Fields& f) {
  OutputSpec o;
  o.format = f.text("output.format", "csv");
  o.path = f.text("output.path", "-");
  if (o.format != "csv" && o.format != "json") {
    throw ConfigError("output.format must be 'csv' or 'json', got '" + o.format + "'");
  }
  return o;
}

/// Pair at the first sweep point. Atom 2 defaults to a copy of atom 1 when its
/// frequency is not given.
inline PairConfig pair_from(const Fields& f) {
  PairConfig p;
  p.atom1 = atom_from(f, "atom1");
  p.atom2 = f.has("atom2.omega_eV") ? atom_from(f, "atom2") : p.atom1;
  if (!f.has("atom2.omega_eV")) {
    for (const char* k : {"atom2.reduced_mass_eV", "atom2.charge_e", "atom2.total_mass_eV", "atom2.temperature_K"}) {
      if (f.has(k)) throw ConfigError(std::string(k) + " given without atom2.omega_eV");
    }
  }
  p.bath.beta = f.temperature("field.temperature_K");
  p.squeeze = squeeze_from(f, p.atom1);
  p.z = 1.0;
  return p;
}

/// FNV-1a over the canonical "key=value" listing plus the command name.
inline std::uint64_t config_hash(const RawConfig& raw, const std::string& command) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(command);
  feed("\n");
  for (const auto& [k, v] : raw) feed(k + "=" + v + "\n");
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace atomforce::cli
