#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "atomforce/errors.hpp"
#include "atomforce/ladder.hpp"
#include "atomforce/model.hpp"

namespace atomforce::entanglement {

/// Long-time cross-correlator amplitude per axis,
///   A_j = (1/8)(beta_j^2 - 1/alpha_j^2)(alpha_j^2/beta_j^2 - 1/(mu Omega)^2),
/// so that g_ent(z) = A_j cos(Omega z).
struct EntanglementKernel {
  std::array<double, 3> amplitude{};
  double omega = 0.0;

  static EntanglementKernel from(const SqueezeState& s, const AtomSpec& atom) {
    s.validate();
    EntanglementKernel k;
    k.omega = atom.omega;
    const double muw = atom.mu * atom.omega;
    for (int j = 0; j < 3; ++j) {
      const double a = s.alpha[j], b = s.beta_sq[j];
      k.amplitude[j] = 0.125 * (b * b - 1.0 / (a * a)) * (a * a / (b * b) - 1.0 / (muw * muw));
    }
    return k;
  }
};

/// Dimensionless squeeze parameters: alpha = alpha_tilde / sqrt(mu Omega),
/// beta = beta_tilde sqrt(mu Omega), which puts A = (beta~^2 - 1/alpha~^2)(alpha~^2/beta~^2 - 1) / (8 mu Omega).
inline SqueezeState squeeze_from_tilde(const std::array<double, 3>& alpha_tilde,
                                       const std::array<double, 3>& beta_tilde, const AtomSpec& atom) {
  const double root = std::sqrt(atom.mu * atom.omega);
  SqueezeState s;
  for (int j = 0; j < 3; ++j) {
    s.alpha[j] = alpha_tilde[j] / root;
    s.beta_sq[j] = beta_tilde[j] * root;
  }
  s.validate();
  return s;
}

/// (beta~^2 - 1/alpha~^2)(alpha~^2/beta~^2 - 1) along one axis.
inline double tilde_factor(double alpha_tilde, double beta_tilde) {
  return (beta_tilde * beta_tilde - 1.0 / (alpha_tilde * alpha_tilde)) *
         (alpha_tilde * alpha_tilde / (beta_tilde * beta_tilde) - 1.0);
}

namespace detail {

inline void require_common_oscillator(const PairConfig& pair, const char* op) {
  if (pair.atom1.mu != pair.atom2.mu || pair.atom1.omega != pair.atom2.omega) {
    throw UnsupportedError(std::string(op) + ": the entangled state is defined for atoms sharing (mu, Omega)");
  }
}

inline const SqueezeState& require_squeeze(const PairConfig& pair, const char* op) {
  if (!pair.squeeze) throw ConfigError(std::string(op) + ": no squeeze state configured");
  return *pair.squeeze;
}

inline const SqueezeState& require_isotropic(const PairConfig& pair, const char* op) {
  const auto& s = require_squeeze(pair, op);
  if (!s.isotropic()) {
    throw ConfigError(std::string(op) + ": squeeze state is anisotropic; use the anisotropic form");
  }
  return s;
}

/// [z^3 L^3 + 5 z L^2](cos(w z) / z), held exactly and evaluated at w = Omega.
inline const ladder::TrigSeries& unit_kernel() {
  static const ladder::TrigSeries k = ladder::derive_ent_kernel(ladder::TrigSeries::cos(1));
  return k;
}

inline double coupling(const PairConfig& pair) { return pair.atom1.q * pair.atom2.q / (4 * std::numbers::pi); }

}  // namespace detail

/// A_j cos(Omega z) along each axis.
inline std::array<double, 3> g_ent_longtime(const SqueezeState& state, const AtomSpec& atom1,
                                            const AtomSpec& atom2, double z) {
  if (atom1.mu != atom2.mu || atom1.omega != atom2.omega) {
    throw UnsupportedError("g_ent_longtime: atoms must share (mu, Omega)");
  }
  const auto k = EntanglementKernel::from(state, atom1);
  std::array<double, 3> g{};
  for (int j = 0; j < 3; ++j) g[j] = k.amplitude[j] * std::cos(atom1.omega * z);
  return g;
}

/// Full static form: -(q1 q2 / 4 pi) [z^3 L^3 + 5 z L^2](g_ent / z).
inline double f_ent_isotropic(const PairConfig& pair) {
  pair.validate();
  detail::require_common_oscillator(pair, "f_ent_isotropic");
  const auto& s = detail::require_isotropic(pair, "f_ent_isotropic");
  const double a = EntanglementKernel::from(s, pair.atom1).amplitude[0];
  const long double kernel = detail::unit_kernel().evaluate<long double>(pair.atom1.omega, pair.z);
  return static_cast<double>(-detail::coupling(pair) * a * kernel);
}

/// Near-field limit -(q1 q2 / 32 pi)(beta^2 - 1/alpha^2)(alpha^2/beta^2 - 1/(mu Omega)^2) Omega^2 / z^2.
inline double f_ent_nearfield(const PairConfig& pair) {
  pair.validate();
  detail::require_common_oscillator(pair, "f_ent_nearfield");
  const auto& s = detail::require_isotropic(pair, "f_ent_nearfield");
  const double a = EntanglementKernel::from(s, pair.atom1).amplitude[0];
  const double w = pair.atom1.omega;
  return -detail::coupling(pair) * a * w * w / (pair.z * pair.z);
}

/// Coulomb-like anisotropic form -(3/4 pi) q1 q2 [D_x + D_y - 2 D_z] / z^4,
/// given the per-axis amplitudes directly.
inline double f_ent_anisotropic(double q1, double q2, const std::array<double, 3>& d, double z) {
  const double bracket = d[0] + d[1] - 2 * d[2];
  const double z2 = z * z;
  return -3 * (q1 * q2 / (4 * std::numbers::pi)) * bracket / (z2 * z2);
}

inline double f_ent_anisotropic(const PairConfig& pair) {
  pair.validate();
  detail::require_common_oscillator(pair, "f_ent_anisotropic");
  const auto& s = detail::require_squeeze(pair, "f_ent_anisotropic");
  return f_ent_anisotropic(pair.atom1.q, pair.atom2.q, EntanglementKernel::from(s, pair.atom1).amplitude, pair.z);
}

}  // namespace atomforce::entanglement
