#pragma once

#include <algorithm>
#include <atomic>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "atomforce/analysis.hpp"
#include "atomforce/cli/dataset.hpp"
#include "atomforce/cli/run_config.hpp"
#include "atomforce/dispersion_forces.hpp"
#include "atomforce/dynamics.hpp"
#include "atomforce/ladder.hpp"
#include "atomforce/units.hpp"

namespace atomforce::cli {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode { exit_ok = 0, exit_validation = 1, exit_convergence = 2, exit_verification = 3 };

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::convergence:
    case ErrorKind::numerical: return exit_convergence;
    case ErrorKind::verification: return exit_verification;
    default: return exit_validation;
  }
}

struct CommandResult {
  Dataset data;
  int exit_code = exit_ok;
  std::vector<std::string> diagnostics;  // for stderr
};

inline std::vector<std::string> header_comments(const RawConfig& raw, const std::string& command) {
  return {std::string("atomforce ") + tool_version + " " + command,
          "config-hash fnv1a64:" + hex64(config_hash(raw, command))};
}

/// Runs fn(i) for i in [0, n) on a few threads. Results are stored by index so
/// the output order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

// ---------------------------------------------------------------------------
// force

struct ComponentColumn {
  const char* name;
  std::optional<ComponentValue> ForceBreakdown::*slot;
  bool forces::ComponentSelection::*flag;
};

inline const std::vector<ComponentColumn>& component_columns() {
  static const std::vector<ComponentColumn> cols = {
      {"f_A", &ForceBreakdown::f_A, &forces::ComponentSelection::fA},
      {"f_B", &ForceBreakdown::f_B, &forces::ComponentSelection::fB},
      {"f_C", &ForceBreakdown::f_C_integral, &forces::ComponentSelection::fC_integral},
      {"delta_f_C", &ForceBreakdown::delta_f_C, &forces::ComponentSelection::delta_fC},
      {"f_london", &ForceBreakdown::f_london, &forces::ComponentSelection::london},
      {"f_cp_farfield", &ForceBreakdown::f_cp_farfield, &forces::ComponentSelection::cp_farfield},
      {"f_noneq", &ForceBreakdown::f_noneq, &forces::ComponentSelection::noneq},
      {"f_ent", &ForceBreakdown::f_ent, &forces::ComponentSelection::entanglement},
  };
  return cols;
}

inline CommandResult run_force(const RawConfig& raw) {
  const Fields f(raw);
  const PairConfig base = pair_from(f);
  const auto spec = quadrature_from(f);
  const auto sweep = sweep_from(f);
  const auto sel = selection_from(f.text("force.components", "full"), f.text("force.entanglement_form", "isotropic"),
                                  "force.components");
  sel.validate();

  CommandResult out;
  Dataset& d = out.data;
  d.comments = header_comments(raw, "force");
  d.columns = {"z_nm", "z_inv_eV", "omega_z", "regime"};
  std::vector<const ComponentColumn*> active;
  for (const auto& c : component_columns()) {
    if (sel.*(c.flag)) {
      active.push_back(&c);
      d.columns.push_back(std::string(c.name) + "_eV2");
      d.columns.push_back(std::string(c.name) + "_N");
      d.columns.push_back(std::string(c.name) + "_method");
    }
  }
  for (const char* c : {"total_eV2", "total_N", "error"}) d.columns.push_back(c);

  std::vector<std::vector<Cell>> rows(sweep.z_nm.size());
  std::vector<std::optional<ErrorKind>> failures(sweep.z_nm.size());
  parallel_for(sweep.z_nm.size(), [&](std::size_t i) {
    const PairConfig p = base.at(units::to_internal_length(sweep.z_nm[i]));
    std::vector<Cell> row{sweep.z_nm[i], p.z, p.omega_min() * p.z, std::string(forces::to_string(forces::regime(p)))};
    try {
      const auto b = forces::total_force(p, sel, spec);
      for (const auto* c : active) {
        const auto& v = b.*(c->slot);
        row.push_back(v->value);
        row.push_back(units::force_to_newtons(v->value));
        row.push_back(std::string(to_string(v->method)));
      }
      row.push_back(b.total);
      row.push_back(units::force_to_newtons(b.total));
      row.push_back(std::string());
    } catch (const Error& e) {
      failures[i] = e.kind();
      row.resize(d.columns.size() - 1);
      row.push_back(std::string(to_string(e.kind())) + ": " + e.what());
    }
    rows[i] = std::move(row);
  });
  d.rows = std::move(rows);
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (failures[i]) {
      out.diagnostics.push_back("row " + std::to_string(i) + " failed: " +
                                std::get<std::string>(d.rows[i].back()));
      if (out.exit_code == exit_ok) out.exit_code = exit_code_for(*failures[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyReport {
  bool passed = false;
  std::string text;
};

inline std::string coefficient_list(const std::array<ladder::Rational, 3>& c) {
  return c[0].str() + ", " + c[1].str() + ", " + c[2].str();
}

inline VerifyReport run_verify(const ladder::FcTargetCoefficients& target = {}) {
  std::ostringstream os;
  const auto d = ladder::derive_fc_integrand(target);
  os << "induced-dipole integrand (times z^7): " << (d.matched ? "PASS" : "FAIL") << '\n';
  os << "bracket convention: " << ladder::to_string(d.placement) << '\n';
  os << "target coefficients (cos | sin): (" << coefficient_list(target.cos_part) << " | "
     << coefficient_list(target.sin_part) << ")\n";
  if (d.matched) {
    os << "canonical polynomial:\n" << d.derived.to_string();
  } else {
    os << "derived polynomial:\n" << d.derived.to_string();
    os << "mismatching terms (derived - target):\n";
    for (const auto& m : d.mismatch) os << "  [" << m.side << "] " << ladder::TrigSeries::format_term(m.term) << '\n';
  }

  // Entanglement kernel: leading Laurent terms of [z^3 L^3 + 5 z L^2](cos(wz)/z).
  const auto k = ladder::derive_ent_kernel(ladder::TrigSeries::cos(1));
  const auto series = ladder::expand_about_zero(k, 2);
  const auto coeff = [&](int zp, int wp) {
    auto it = series.find({zp, wp});
    return it == series.end() ? ladder::Rational(0) : it->second;
  };
  const bool ent_ok = coeff(-2, 2) == 1 && coeff(0, 4) == ladder::Rational(1, 2) &&
                      coeff(2, 6) == ladder::Rational(-1, 8);
  os << "entanglement kernel expansion: " << (ent_ok ? "PASS" : "FAIL") << '\n';
  for (const auto& [key, c] : series) os << "  " << c.str() << " w^" << key.second << " z^" << key.first << '\n';
  return {d.matched && ent_ok, os.str()};
}

// ---------------------------------------------------------------------------
// ratio

inline CommandResult run_ratio(const RawConfig& raw) {
  const Fields f(raw);
  const PairConfig pair = pair_from(f);
  const auto sweep = sweep_from(f);
  const std::string kind = f.text("ratio.kind", "noneq");
  CommandResult out;
  Dataset& d = out.data;
  d.comments = header_comments(raw, "ratio");
  if (kind == "noneq") {
    if (pair.bath.beta.is_zero()) throw ConfigError("ratio.kind = noneq needs a finite field.temperature_K");
    const double k = f.positive("ratio.omega_over_c_per_um", units::energy_to_ordinary_wavenumber_per_um(pair.atom1.omega));
    const double beta_omega = pair.bath.beta.beta() * pair.atom1.omega;
    d.comments.push_back("reference column: (24 pi/322) (k z)^5 / (e^{beta Omega} - 1), k = " + format_number(k) + " /um");
    d.columns = {"z_nm", "omega_z", "ratio", "ratio_reference"};
    for (double z_nm : sweep.z_nm) {
      const double z = units::to_internal_length(z_nm);
      const double r = analysis::ratio_noneq(pair, z);
      Cell reference;
      if (pair.same_species()) {
        reference = analysis::ratio_noneq_reference(analysis::same_species_prefactor, k, z_nm * 1e-3, beta_omega);
      }
      d.rows.push_back({z_nm, pair.atom1.omega * z, r, reference});
    }
  } else if (kind == "entanglement") {
    if (!pair.squeeze || !pair.squeeze->isotropic()) {
      throw ConfigError("ratio.kind = entanglement needs an isotropic squeeze block");
    }
    const double tilde = entanglement::tilde_factor(f.positive("squeeze.alpha_tilde"), f.positive("squeeze.beta_tilde"));
    const double reference_p = 8.9 * tilde;
    d.comments.push_back("reference column: 8.9 D (z/nm)^5 with D = " + format_number(tilde));
    d.columns = {"z_nm", "omega_z", "ratio", "ratio_reference", "near_field"};
    for (double z_nm : sweep.z_nm) {
      const double z = units::to_internal_length(z_nm);
      const auto r = analysis::ratio_entanglement(pair, z);
      d.rows.push_back({z_nm, pair.atom1.omega * z, r.internal, reference_p * std::pow(z_nm, 5),
                        std::string(pair.atom1.omega * z < 0.1 ? "yes" : "no")});
    }
  } else {
    throw ConfigError("ratio.kind must be 'noneq' or 'entanglement', got '" + kind + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// crossover

inline CommandResult run_crossover(const RawConfig& raw) {
  const Fields f(raw);
  CommandResult out;
  Dataset& d = out.data;
  d.comments = header_comments(raw, "crossover");
  d.columns = {"kind", "prefactor", "z_star_nm", "omega_z", "validity"};
  if (f.has("crossover.prefactor")) {
    const double p = f.positive("crossover.prefactor");
    d.rows.push_back({std::string("prefactor"), p, analysis::crossover_prefactor_nm(p), Cell{}, std::string("n/a")});
    return out;
  }
  const PairConfig pair = pair_from(f);
  const std::string kind = f.text("crossover.kind", "entanglement");
  analysis::RatioKind rk;
  if (kind == "entanglement") rk = analysis::RatioKind::ent_over_london;
  else if (kind == "noneq") rk = analysis::RatioKind::noneq_over_cp;
  else throw ConfigError("crossover.kind must be 'entanglement' or 'noneq', got '" + kind + "'");
  const double lo = units::to_internal_length(f.positive("crossover.z_lo_nm", 1e-3));
  const double hi = units::to_internal_length(f.positive("crossover.z_hi_nm", 1e4));
  const auto c = analysis::crossover_distance(rk, pair, lo, hi);
  Cell prefactor;
  if (rk == analysis::RatioKind::ent_over_london) {
    prefactor = std::abs(analysis::ratio_entanglement(pair, c.z).coefficient_nm5);
  }
  d.rows.push_back({kind, prefactor, units::to_lab_length(c.z), c.omega_z,
                    std::string(c.near_field ? "inside near-field window" : "outside near-field window")});
  return out;
}

// ---------------------------------------------------------------------------
// trajectory

inline CommandResult run_trajectory(const RawConfig& raw) {
  const Fields f(raw);
  PairConfig pair = pair_from(f);
  const auto spec = quadrature_from(f);
  const auto sel = selection_from(f.text("trajectory.components", "london"), f.text("force.entanglement_form", "isotropic"),
                                  "trajectory.components");
  dynamics::IntegrationSettings s;
  s.z0 = units::to_internal_length(f.positive("trajectory.z0_nm"));
  s.v0 = f.number("trajectory.v0_c", 0.0);
  s.dt = f.positive("trajectory.dt_inv_eV");
  s.t_max = f.positive("trajectory.t_max_inv_eV");
  if (f.has("trajectory.z_min_nm")) s.z_min = units::to_internal_length(f.positive("trajectory.z_min_nm"));
  const auto traj = dynamics::integrate(pair, sel, s, spec);

  CommandResult out;
  Dataset& d = out.data;
  d.comments = header_comments(raw, "trajectory");
  d.comments.push_back(std::string("halt: ") + dynamics::to_string(traj.halt));
  for (const auto& w : traj.warnings) d.comments.push_back("warning: " + w);
  d.columns = {"t_inv_eV", "t_s", "z_nm", "v_c", "f_eV2", "f_N"};
  const double hbar = units::codata2018.hbar;
  for (const auto& st : traj.states) {
    d.rows.push_back({st.t, st.t * hbar, units::to_lab_length(st.z), st.v, st.f, units::force_to_newtons(st.f)});
  }
  out.diagnostics = traj.warnings;
  if (traj.error) {
    out.diagnostics.push_back(*traj.error);
    out.exit_code = exit_validation;
  }
  return out;
}

}  // namespace atomforce::cli
