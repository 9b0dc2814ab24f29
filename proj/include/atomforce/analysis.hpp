#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "atomforce/dispersion_forces.hpp"
#include "atomforce/entanglement_forces.hpp"
#include "atomforce/errors.hpp"
#include "atomforce/model.hpp"
#include "atomforce/units.hpp"

namespace atomforce::analysis {

/// 24 pi / 322, the same-species coefficient of the nonequilibrium ratio.
inline constexpr double same_species_prefactor = 24 * std::numbers::pi / 322;
/// 8 pi / 161, the per-species coefficient of the two-species ratio.
inline constexpr double two_species_prefactor = 8 * std::numbers::pi / 161;

/// Far-field delta_f_C / f_C with the field at inverse temperature beta and
/// Omega z dimensionless (c = 1). Identical atoms use the reference same-species
/// form; otherwise -(8 pi/161) Omega1^2 Omega2^5/(Omega1^2 - Omega2^2) z^5 n(beta Omega2) + (1 <-> 2).
inline double ratio_noneq(const PairConfig& pair, double z) {
  const PairConfig p = pair.at(z);
  p.validate();
  if (p.bath.beta.is_zero()) return 0.0;
  const auto& b = p.bath.beta;
  if (p.same_species()) {
    return same_species_prefactor * std::pow(p.atom1.omega * z, 5) * b.occupation(p.atom1.omega);
  }
  p.require_nondegenerate("ratio_noneq (two-species branch)");
  const double w1 = p.atom1.omega, w2 = p.atom2.omega;
  const double d = w1 * w1 - w2 * w2;
  const double z5 = std::pow(z, 5);
  const double t2 = w1 * w1 * std::pow(w2, 5) / d * b.occupation(w2);
  const double t1 = w2 * w2 * std::pow(w1, 5) / (-d) * b.occupation(w1);
  return -two_species_prefactor * (t1 + t2) * z5;
}

/// The reference hydrogen reading: prefactor (k z)^5 / (e^{beta Omega} - 1) with
/// k = Omega / c given directly in 1/um (8 in the hydrogen example).
inline double ratio_noneq_reference(double prefactor, double k_per_um, double z_um, double beta_omega) {
  return prefactor * std::pow(k_per_um * z_um, 5) / std::expm1(beta_omega);
}

/// Entanglement-to-London ratio, computed two ways.
struct EntanglementRatio {
  double internal = 0.0;       // f_ent_nearfield / f_london in natural units
  double coefficient_nm5 = 0.0;  // internal / (z/nm)^5
};

/// Same species only. Uses the implemented closed forms directly.
inline EntanglementRatio ratio_entanglement(const PairConfig& pair, double z) {
  const PairConfig p = pair.at(z);
  if (!p.same_species()) throw UnsupportedError("ratio_entanglement: atoms must be the same species");
  EntanglementRatio r;
  r.internal = entanglement::f_ent_nearfield(p) / forces::f_london(p);
  r.coefficient_nm5 = r.internal / std::pow(units::to_lab_length(z), 5);
  return r;
}

/// The reference SI formula (4 eps0 / 9 c^2)(mu Omega^4 / q^2) D z^5 with D the
/// tilde factor; returns the coefficient of (z/nm)^5. `omega_si` is in 1/s.
inline double entanglement_ratio_si_coefficient(double mu_kg, double omega_si, double q_coulomb, double tilde,
                                                const units::UnitSystem& u = units::codata2018) {
  const double c = u.speed_of_light;
  const double nm5 = 1e-45;
  return 4 * u.vacuum_permittivity / (9 * c * c) * mu_kg * std::pow(omega_si, 4) / (q_coulomb * q_coulomb) * tilde * nm5;
}

/// Numbers for hydrogen (Omega = 10 eV, mu = electron mass, q = e) at unit tilde factor.
struct HydrogenEntanglementReport {
  double reference_prefactor = 8.9;
  double internal_prefactor = 0.0;     // from f_ent_nearfield / f_london
  double si_angular_prefactor = 0.0;   // SI formula, Omega = E / hbar
  double si_ordinary_prefactor = 0.0;  // SI formula, Omega = E / h
};

inline HydrogenEntanglementReport hydrogen_entanglement_report(const units::UnitSystem& u = units::codata2018) {
  HydrogenEntanglementReport r;
  const double omega = 10.0;
  AtomSpec h{units::charge_to_internal(1.0, u), u.electron_mass, omega, u.electron_mass};
  PairConfig p;
  p.atom1 = p.atom2 = h;
  // alpha~ = 1, beta~ = sqrt(2) gives D = (2 - 1)(1/2 - 1) = -1/2; rescale to D = 1.
  const double bt = std::sqrt(2.0);
  p.squeeze = entanglement::squeeze_from_tilde({1, 1, 1}, {bt, bt, bt}, h);
  const double d = entanglement::tilde_factor(1.0, bt);
  p.z = units::to_internal_length(1.0, u);
  r.internal_prefactor = ratio_entanglement(p, p.z).coefficient_nm5 / d;
  r.si_angular_prefactor =
      entanglement_ratio_si_coefficient(u.electron_mass_kg, units::energy_to_angular_frequency(omega, u),
                                        u.elementary_charge, 1.0, u);
  r.si_ordinary_prefactor =
      entanglement_ratio_si_coefficient(u.electron_mass_kg, units::energy_to_ordinary_frequency(omega, u),
                                        u.elementary_charge, 1.0, u);
  return r;
}

struct Crossover {
  double z = 0.0;          // internal length (1/eV)
  double omega_z = 0.0;
  bool near_field = false;  // Omega z < 0.1
};

/// Solves ratio(z) = 1 by bisection in ln z on [z_lo, z_hi] to relative 1e-12.
inline double solve_unit_ratio(const std::function<double(double)>& ratio, double z_lo, double z_hi) {
  if (!(z_lo > 0.0) || !(z_hi > z_lo)) throw DomainError("crossover bracket must satisfy 0 < z_lo < z_hi");
  double lo = std::log(z_lo), hi = std::log(z_hi);
  double flo = ratio(z_lo) - 1, fhi = ratio(z_hi) - 1;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || flo * fhi > 0) {
    throw NotFoundError("ratio does not cross 1 inside the search bracket");
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = ratio(std::exp(mid)) - 1;
    if (fm == 0) return std::exp(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

enum class RatioKind { noneq_over_cp, ent_over_london };

inline const char* to_string(RatioKind k) {
  return k == RatioKind::noneq_over_cp ? "noneq_over_cp" : "ent_over_london";
}

inline double ratio_value(RatioKind kind, const PairConfig& pair, double z) {
  return kind == RatioKind::noneq_over_cp ? ratio_noneq(pair, z) : std::abs(ratio_entanglement(pair, z).internal);
}

/// Separation where |f_ent / f_london| (or delta_f_C / f_C) equals one.
inline Crossover crossover_distance(RatioKind kind, const PairConfig& pair, double z_lo, double z_hi) {
  Crossover c;
  c.z = solve_unit_ratio([&](double z) { return ratio_value(kind, pair, z); }, z_lo, z_hi);
  c.omega_z = pair.omega_min() * c.z;
  c.near_field = c.omega_z < 0.1;
  return c;
}

/// Solves P (z/nm)^5 = 1; answer in nm.
inline double crossover_prefactor_nm(double prefactor) {
  if (!(prefactor > 0.0)) throw DomainError("crossover prefactor must be > 0");
  return solve_unit_ratio([&](double z) { return prefactor * std::pow(z, 5); }, 1e-6, 1e6);
}

/// Least-squares slope of ln|f| against ln z over log-spaced samples.
inline double logslope(const std::function<double(double)>& f, double z_lo, double z_hi, int points = 16) {
  if (points < 8) throw DomainError("logslope needs at least 8 points");
  if (!(z_lo > 0.0) || !(z_hi > z_lo)) throw DomainError("logslope range must satisfy 0 < z_lo < z_hi");
  std::vector<double> xs, ys;
  int sign = 0;
  for (int i = 0; i < points; ++i) {
    const double z = z_lo * std::pow(z_hi / z_lo, static_cast<double>(i) / (points - 1));
    const double v = f(z);
    const int s = (v > 0) - (v < 0);
    if (s == 0 || (sign != 0 && s != sign)) throw DomainError("logslope: function changes sign or vanishes");
    sign = s;
    xs.push_back(std::log(z));
    ys.push_back(std::log(std::abs(v)));
  }
  double mx = 0, my = 0;
  for (int i = 0; i < points; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= points;
  my /= points;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < points; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

struct RatioCurve {
  RatioKind kind = RatioKind::noneq_over_cp;
  std::vector<std::pair<double, double>> samples;  // (z, ratio)
  PairConfig params;
};

inline RatioCurve ratio_curve(RatioKind kind, const PairConfig& pair, const std::vector<double>& zs) {
  RatioCurve c;
  c.kind = kind;
  c.params = pair;
  for (double z : zs) {
    if (!c.samples.empty() && !(z > c.samples.back().first)) throw DomainError("ratio_curve: z must increase");
    const double r = kind == RatioKind::noneq_over_cp ? ratio_noneq(pair, z) : ratio_entanglement(pair, z).internal;
    if (!std::isfinite(r)) throw NumericalError("ratio_curve: non-finite ratio");
    c.samples.emplace_back(z, r);
  }
  return c;
}

}  // namespace atomforce::analysis
