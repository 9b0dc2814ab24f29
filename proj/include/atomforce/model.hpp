#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "atomforce/errors.hpp"

namespace atomforce {

/// Inverse temperature in 1/eV, or the zero-temperature marker. Zero temperature
/// is kept symbolic so that coth -> 1 and n -> 0 are substituted exactly.
class InverseTemperature {
 public:
  static InverseTemperature zero() { return InverseTemperature(); }

  static InverseTemperature finite(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw DomainError("inverse temperature must be finite and > 0, got " + std::to_string(beta));
    }
    InverseTemperature t;
    t.beta_ = beta;
    return t;
  }

  bool is_zero() const noexcept { return !beta_.has_value(); }

  /// Only meaningful for finite temperatures.
  double beta() const {
    if (!beta_) throw DomainError("zero-temperature marker has no finite beta");
    return *beta_;
  }

  /// coth(beta omega / 2) for omega > 0.
  double coth_half(double omega) const {
    if (!beta_) return 1.0;
    return 1.0 / std::tanh(0.5 * *beta_ * omega);
  }

  /// Bose occupation 1/(e^{beta omega} - 1).
  double occupation(double omega) const {
    if (!beta_) return 0.0;
    return 1.0 / std::expm1(*beta_ * omega);
  }

  friend bool operator==(const InverseTemperature&, const InverseTemperature&) = default;

 private:
  InverseTemperature() = default;
  std::optional<double> beta_;
};

/// One atom: coupling q (internal units), reduced mass mu (eV), oscillator
/// frequency omega (eV), total mass (eV), and internal temperature.
struct AtomSpec {
  double q = 0.0;
  double mu = 0.0;
  double omega = 0.0;
  double total_mass = 0.0;
  InverseTemperature temperature = InverseTemperature::zero();

  void validate(const std::string& label = "atom") const {
    if (!(q != 0.0) || !std::isfinite(q)) throw ConfigError(label + ".q must be finite and nonzero");
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError(label + ".mu must be > 0");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigError(label + ".omega must be > 0");
    if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
      throw ConfigError(label + ".total_mass must be > 0");
    }
  }

  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

/// Field state: inverse temperature and the UV regulator scale (1/eV).
struct BathSpec {
  InverseTemperature beta = InverseTemperature::zero();
  std::optional<double> uv_eta;  // unset: chosen from the atom frequencies

  friend bool operator==(const BathSpec&, const BathSpec&) = default;
};

/// Per-axis squeeze parameters of the two-atom entangled Gaussian state, in
/// internal units: alpha has the dimension of the oscillator coordinate (1/eV),
/// beta_sq its inverse (eV). These are not temperatures.
struct SqueezeState {
  std::array<double, 3> alpha{1.0, 1.0, 1.0};
  std::array<double, 3> beta_sq{1.0, 1.0, 1.0};

  static SqueezeState isotropic_state(double alpha, double beta) {
    SqueezeState s;
    s.alpha = {alpha, alpha, alpha};
    s.beta_sq = {beta, beta, beta};
    s.validate();
    return s;
  }

  void validate() const {
    for (int j = 0; j < 3; ++j) {
      if (!(alpha[j] > 0.0) || !(beta_sq[j] > 0.0) || !std::isfinite(alpha[j]) ||
          !std::isfinite(beta_sq[j])) {
        throw ConfigError("squeeze parameters must all be finite and > 0");
      }
    }
  }

  bool isotropic() const {
    return alpha[0] == alpha[1] && alpha[1] == alpha[2] && beta_sq[0] == beta_sq[1] &&
           beta_sq[1] == beta_sq[2];
  }

  friend bool operator==(const SqueezeState&, const SqueezeState&) = default;
};

inline constexpr double default_degeneracy_guard = 1e-6;

/// Two atoms, the field, an optional entangled state and their separation z
/// (1/eV). Atom 2 sits at the origin; z points from atom 2 to atom 1.
struct PairConfig {
  AtomSpec atom1;
  AtomSpec atom2;
  BathSpec bath;
  std::optional<SqueezeState> squeeze;
  double z = 1.0;
  double degeneracy_guard = default_degeneracy_guard;

  void validate() const {
    atom1.validate("atom1");
    atom2.validate("atom2");
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("separation z must be > 0");
    if (bath.uv_eta && !(*bath.uv_eta > 0.0)) throw ConfigError("bath.uv_eta must be > 0");
    if (squeeze) squeeze->validate();
  }

  /// |O1^2 - O2^2| / (O1^2 + O2^2); compared against degeneracy_guard.
  double frequency_splitting() const {
    const double a = atom1.omega * atom1.omega;
    const double b = atom2.omega * atom2.omega;
    return std::abs(a - b) / (a + b);
  }

  void require_nondegenerate(const char* operation) const {
    if (frequency_splitting() < degeneracy_guard) {
      throw DegeneracyError(std::string(operation) +
                            ": Omega_1 and Omega_2 are degenerate within the configured guard");
    }
  }

  bool same_species() const {
    return atom1.q == atom2.q && atom1.mu == atom2.mu && atom1.omega == atom2.omega;
  }

  PairConfig at(double separation) const {
    PairConfig p = *this;
    p.z = separation;
    return p;
  }

  /// Relabel atom1 <-> atom2 at fixed z.
  PairConfig swapped() const {
    PairConfig p = *this;
    std::swap(p.atom1, p.atom2);
    return p;
  }

  double omega_max() const { return std::max(atom1.omega, atom2.omega); }
  double omega_min() const { return std::min(atom1.omega, atom2.omega); }
};

/// Static dynamic polarizability q^2 / (4 pi mu (Omega^2 - omega^2)).
inline double dynamic_polarizability(const AtomSpec& atom, double omega) {
  if (!(omega >= 0.0)) throw DomainError("polarizability frequency must be >= 0");
  const double denom = atom.omega * atom.omega - omega * omega;
  if (std::abs(denom) <= 1e-12 * atom.omega * atom.omega) {
    throw PoleError("dynamic_polarizability evaluated on the resonance; use the principal-value machinery");
  }
  return atom.q * atom.q / (4.0 * std::numbers::pi * atom.mu * denom);
}

/// alpha(i xi) = q^2 / (4 pi mu (Omega^2 + xi^2)), the imaginary-frequency response.
inline double polarizability_imaginary_axis(const AtomSpec& atom, double xi) {
  return atom.q * atom.q / (4.0 * std::numbers::pi * atom.mu * (atom.omega * atom.omega + xi * xi));
}

/// Weight of the delta(omega - Omega) line in the undamped polarizability:
/// q^2/(4 pi mu Omega) * pi/2.
inline double polarizability_imaginary_weight(const AtomSpec& atom) {
  return atom.q * atom.q / (4.0 * std::numbers::pi * atom.mu * atom.omega) * (std::numbers::pi / 2.0);
}

/// How a component value was obtained.
enum class Method { closed_form, quadrature_dissipative, quadrature_principal_value, asymptotic, ladder };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::quadrature_dissipative: return "quadrature-dissipative";
    case Method::quadrature_principal_value: return "quadrature-pv";
    case Method::asymptotic: return "asymptotic";
    case Method::ladder: return "ladder";
  }
  return "unknown";
}

struct ComponentValue {
  double value = 0.0;  // eV^2, positive = repulsive (along +z from atom 2 to atom 1)
  Method method = Method::closed_form;
};

/// Every force component at one separation. Unselected components stay empty.
struct ForceBreakdown {
  double z = 0.0;
  std::optional<ComponentValue> f_A;
  std::optional<ComponentValue> f_B;
  std::optional<ComponentValue> f_C_integral;
  std::optional<ComponentValue> delta_f_C;
  std::optional<ComponentValue> f_london;
  std::optional<ComponentValue> f_cp_farfield;
  std::optional<ComponentValue> f_noneq;
  std::optional<ComponentValue> f_ent;
  double total = 0.0;
};

}  // namespace atomforce
