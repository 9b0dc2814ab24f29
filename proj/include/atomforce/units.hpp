#pragma once

// Internal unit system: hbar = c = 1, energies in eV, lengths and times in 1/eV,
// forces in eV^2. Electromagnetic couplings are Heaviside-Lorentz, so one
// elementary charge is sqrt(4 pi alpha_fs).

#include <cmath>
#include <numbers>
#include <string>

#include "atomforce/errors.hpp"

namespace atomforce::units {

struct UnitSystem {
  double hbar_c;                   // eV nm
  double boltzmann;                // eV / K
  double electron_mass;            // eV
  double fine_structure_coupling;  // alpha_fs, dimensionless
  double elementary_charge;        // C (also J per eV)
  double hbar;                     // eV s
  double speed_of_light;           // m / s
  double vacuum_permittivity;      // F / m
  double electron_mass_kg;         // kg
};

/// CODATA 2018 values.
inline constexpr UnitSystem codata2018{
    197.3269804,        8.617333262e-5,   510998.95,       7.2973525693e-3, 1.602176634e-19,
    6.582119569e-16,    299792458.0,      8.8541878128e-12, 9.1093837015e-31};

inline constexpr const UnitSystem& default_units() { return codata2018; }

namespace detail {
inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite and > 0, got " + std::to_string(x));
  }
}
}  // namespace detail

/// nm -> 1/eV
inline double to_internal_length(double nm, const UnitSystem& u = codata2018) {
  detail::require_positive(nm, "length");
  return nm / u.hbar_c;
}

/// 1/eV -> nm
inline double to_lab_length(double inv_eV, const UnitSystem& u = codata2018) {
  detail::require_positive(inv_eV, "internal length");
  return inv_eV * u.hbar_c;
}

/// Kelvin -> beta in 1/eV. Zero temperature has its own marker in the model and
/// is rejected here.
inline double to_internal_inverse_temperature(double kelvin, const UnitSystem& u = codata2018) {
  detail::require_positive(kelvin, "temperature");
  return 1.0 / (u.boltzmann * kelvin);
}

inline double to_lab_temperature(double beta, const UnitSystem& u = codata2018) {
  detail::require_positive(beta, "inverse temperature");
  return 1.0 / (u.boltzmann * beta);
}

/// Energy (eV) expressed as a temperature (K), e.g. 10 eV ~ 116000 K.
inline double energy_to_temperature(double eV, const UnitSystem& u = codata2018) {
  return eV / u.boltzmann;
}

/// Coupling q in internal units for a charge given in multiples of e.
inline double charge_to_internal(double charge_e, const UnitSystem& u = codata2018) {
  return charge_e * std::sqrt(4.0 * std::numbers::pi * u.fine_structure_coupling);
}

inline double charge_to_lab(double q, const UnitSystem& u = codata2018) {
  return q / std::sqrt(4.0 * std::numbers::pi * u.fine_structure_coupling);
}

/// eV^2 -> N. One eV^2 is one eV of energy per 1/eV of length, and 1/eV = hbar c / eV.
inline double newtons_per_internal_force(const UnitSystem& u = codata2018) {
  return u.elementary_charge / (u.hbar_c * 1e-9);
}

inline double force_to_newtons(double eV2, const UnitSystem& u = codata2018) {
  return eV2 * newtons_per_internal_force(u);
}

inline double force_from_newtons(double newtons, const UnitSystem& u = codata2018) {
  return newtons / newtons_per_internal_force(u);
}

/// Angular frequency (rad/s) of an energy: omega = E / hbar.
inline double energy_to_angular_frequency(double eV, const UnitSystem& u = codata2018) {
  return eV / u.hbar;
}

/// Ordinary frequency (Hz) of an energy: nu = E / h.
inline double energy_to_ordinary_frequency(double eV, const UnitSystem& u = codata2018) {
  return eV / (2.0 * std::numbers::pi * u.hbar);
}

inline double ordinary_frequency_to_energy(double hz, const UnitSystem& u = codata2018) {
  return hz * 2.0 * std::numbers::pi * u.hbar;
}

/// Energy expressed as omega/c in 1/um, reading the frequency as angular.
inline double energy_to_angular_wavenumber_per_um(double eV, const UnitSystem& u = codata2018) {
  return eV / u.hbar_c * 1e3;
}

/// Energy expressed as nu/c in 1/um, reading the frequency as ordinary.
inline double energy_to_ordinary_wavenumber_per_um(double eV, const UnitSystem& u = codata2018) {
  return energy_to_angular_wavenumber_per_um(eV, u) / (2.0 * std::numbers::pi);
}

/// Mass in kg -> rest energy in eV.
inline double mass_kg_to_energy(double kg, const UnitSystem& u = codata2018) {
  return kg * u.speed_of_light * u.speed_of_light / u.elementary_charge;
}

}  // namespace atomforce::units
