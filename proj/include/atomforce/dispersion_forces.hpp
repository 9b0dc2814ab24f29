#pragma once

// Closed-form pieces of the two-atom force and the assembled total. All values
// are in eV^2; negative means attraction toward atom 2.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "atomforce/entanglement_forces.hpp"
#include "atomforce/errors.hpp"
#include "atomforce/ladder.hpp"
#include "atomforce/model.hpp"
#include "atomforce/quadrature.hpp"

namespace atomforce::forces {

using quadrature::coupling_product;

namespace detail {

/// K = q1^2 q2^2 / (16 pi^2 mu1 mu2 Omega1 Omega2)
inline double base_constant(const PairConfig& p) {
  return coupling_product(p) / (p.atom1.omega * p.atom2.omega);
}

inline double z7(double z) {
  const double z2 = z * z;
  return z2 * z2 * z2 * z;
}

/// Phi(x) = -9 - 2x^2 - x^4 + (9 - 16x^2 + 3x^4) cos 2x + x(18 - 8x^2 + x^4) sin 2x.
/// Below x = 0.1 a Taylor series replaces the cancelling sum.
class PhiFunction {
 public:
  PhiFunction() {
    using ladder::TrigSeries;
    const TrigSeries q = ladder::quadrature_partner(ladder::fc_target_integrand());
    const TrigSeries phi = TrigSeries::constant(-9) + TrigSeries::constant(-2, 2, 2) +
                           TrigSeries::constant(-1, 4, 4) - q;
    exact_ = phi;
    compiled_ = ladder::CompiledSeries<long double>(phi);
    for (const auto& [key, c] : ladder::expand_about_zero(phi, 40)) {
      series_.push_back({static_cast<long double>(c), key.first});
    }
  }

  double operator()(double x) const {
    if (std::abs(x) < 0.1) {
      long double s = 0;
      for (const auto& [c, k] : series_) s += c * std::pow(static_cast<long double>(x), k);
      return static_cast<double>(s);
    }
    return static_cast<double>(compiled_(x));
  }

  const ladder::TrigSeries& exact() const { return exact_; }

 private:
  ladder::TrigSeries exact_;
  ladder::CompiledSeries<long double> compiled_;
  std::vector<std::pair<long double, int>> series_;
};

inline const PhiFunction& phi() {
  static const PhiFunction f;
  return f;
}

/// The f_A shape with the roles given explicitly: `self` is the atom whose
/// frequency sits in the numerator, `other` the fluctuating partner.
inline double intrinsic(const PairConfig& p, const AtomSpec& self, const AtomSpec& other) {
  const double x = other.omega * p.z;
  const double x2 = x * x;
  const double w1 = self.omega, w2 = other.omega;
  return -base_constant(p) * w1 / (w1 * w1 - w2 * w2) * (9 + 2 * x2 + x2 * x2) *
         other.temperature.coth_half(other.omega) / z7(p.z);
}

}  // namespace detail

inline double f_A(const PairConfig& pair) {
  pair.validate();
  pair.require_nondegenerate("f_A");
  return detail::intrinsic(pair, pair.atom1, pair.atom2);
}

inline double f_B(const PairConfig& pair) {
  pair.validate();
  pair.require_nondegenerate("f_B");
  return detail::intrinsic(pair, pair.atom2, pair.atom1);
}

/// -9 q1^2 q2^2 / (16 pi^2 mu1 mu2 Omega1 Omega2 (Omega1 + Omega2) z^7)
inline double f_london(const PairConfig& pair) {
  pair.validate();
  return -9 * detail::base_constant(pair) / ((pair.atom1.omega + pair.atom2.omega) * detail::z7(pair.z));
}

/// Line contribution of the imaginary polarizability, with the field temperature.
inline double delta_f_C(const PairConfig& pair) {
  pair.validate();
  pair.require_nondegenerate("delta_f_C");
  const double w1 = pair.atom1.omega, w2 = pair.atom2.omega;
  const auto& beta = pair.bath.beta;
  const auto& phi = detail::phi();
  const double d = w1 * w1 - w2 * w2;
  const double sum = beta.coth_half(w2) * w1 / d * phi(w2 * pair.z) + beta.coth_half(w1) * w2 / (-d) * phi(w1 * pair.z);
  return -detail::base_constant(pair) * sum / detail::z7(pair.z);
}

/// -(161 / 4 pi) alpha1(0) alpha2(0) / z^8
inline double f_cp_farfield(const PairConfig& pair) {
  pair.validate();
  const double a1 = dynamic_polarizability(pair.atom1, 0.0);
  const double a2 = dynamic_polarizability(pair.atom2, 0.0);
  return -161.0 / (4 * std::numbers::pi) * a1 * a2 / (detail::z7(pair.z) * pair.z);
}

/// Residual 1/z^3 force when atom and field temperatures differ:
///   -(q1^2 q2^2 / 8 pi^2 mu1 mu2) Omega2^3/(Omega1^2 - Omega2^2) [n(b2 Omega2) - n(b Omega2)] / z^3 + (1 <-> 2)
/// The mu1 mu2 product is kept as is under the swap.
inline double f_noneq(const PairConfig& pair) {
  pair.validate();
  pair.require_nondegenerate("f_noneq");
  const double w1 = pair.atom1.omega, w2 = pair.atom2.omega;
  const auto& b = pair.bath.beta;
  const double d = w1 * w1 - w2 * w2;
  const double t2 = w2 * w2 * w2 / d * (pair.atom2.temperature.occupation(w2) - b.occupation(w2));
  const double t1 = w1 * w1 * w1 / (-d) * (pair.atom1.temperature.occupation(w1) - b.occupation(w1));
  const double z3 = pair.z * pair.z * pair.z;
  return -2 * coupling_product(pair) * (t1 + t2) / z3;
}

/// Leading far-field (1/z^3) parts of f_A, f_B and delta_f_C.
struct FarField {
  double f_A = 0.0;
  double f_B = 0.0;
  double delta_f_C = 0.0;
  double sum() const { return f_A + f_B + delta_f_C; }
};

inline FarField farfield_components(const PairConfig& pair) {
  pair.validate();
  pair.require_nondegenerate("farfield_components");
  const double w1 = pair.atom1.omega, w2 = pair.atom2.omega;
  const double d = w1 * w1 - w2 * w2;
  const double c = coupling_product(pair);
  const double z3 = pair.z * pair.z * pair.z;
  const double c2 = w2 * w2 * w2 / d, c1 = w1 * w1 * w1 / (-d);
  const auto& b = pair.bath.beta;
  FarField f;
  f.f_A = -c * c2 * pair.atom2.temperature.coth_half(w2) / z3;
  f.f_B = -c * c1 * pair.atom1.temperature.coth_half(w1) / z3;
  f.delta_f_C = c * (c2 * b.coth_half(w2) + c1 * b.coth_half(w1)) / z3;
  return f;
}

// ---------------------------------------------------------------------------
// Assembly

enum class EntanglementForm { isotropic_ladder, isotropic_nearfield, anisotropic_nearfield };

inline const char* to_string(EntanglementForm f) {
  switch (f) {
    case EntanglementForm::isotropic_ladder: return "isotropic";
    case EntanglementForm::isotropic_nearfield: return "nearfield";
    case EntanglementForm::anisotropic_nearfield: return "anisotropic";
  }
  return "unknown";
}

struct ComponentSelection {
  bool fA = false;
  bool fB = false;
  bool fC_integral = false;
  bool delta_fC = false;
  bool london = false;
  bool cp_farfield = false;
  bool noneq = false;
  bool entanglement = false;
  EntanglementForm entanglement_form = EntanglementForm::isotropic_ladder;

  bool empty() const {
    return !(fA || fB || fC_integral || delta_fC || london || cp_farfield || noneq || entanglement);
  }

  /// Rejects sums that would count the same physics twice through an exact
  /// component and its asymptotic form.
  void validate() const {
    if (empty()) throw ConfigError("component selection is empty");
    if (london && (fA || fB)) throw ConfigError("london is the near-field form of fA + fB; select one or the other");
    if (cp_farfield && fC_integral) throw ConfigError("cp_farfield is the far-field form of fC; select one or the other");
    if (noneq && (fA || fB || delta_fC)) {
      throw ConfigError("noneq is the far-field form of fA + fB + delta_fC; select one or the other");
    }
  }

  /// fA + fB + fC + delta_fC
  static ComponentSelection full() {
    ComponentSelection s;
    s.fA = s.fB = s.fC_integral = s.delta_fC = true;
    return s;
  }
};

/// Evaluates the selected components. When delta_fC is selected together with
/// fC, the integral contributes its principal value only, since the line terms
/// are already carried by delta_fC. Alone, fC is the full dissipative value.
inline ForceBreakdown total_force(const PairConfig& pair, const ComponentSelection& sel,
                                  const quadrature::QuadratureSpec& spec = {}) {
  sel.validate();
  pair.validate();
  ForceBreakdown out;
  out.z = pair.z;
  auto run = [&](const char* name, std::optional<ComponentValue>& slot, Method method, auto&& fn) {
    try {
      slot = ComponentValue{fn(), method};
    } catch (const Error& e) {
      rethrow_with_context(e, name);
    }
    out.total += slot->value;
  };
  if (sel.fA) run("f_A", out.f_A, Method::closed_form, [&] { return f_A(pair); });
  if (sel.fB) run("f_B", out.f_B, Method::closed_form, [&] { return f_B(pair); });
  if (sel.fC_integral) {
    const bool pv = sel.delta_fC;
    run("f_C", out.f_C_integral, pv ? Method::quadrature_principal_value : Method::quadrature_dissipative, [&] {
      const auto r = quadrature::integrate_fc(pair, spec);
      return pv ? r.principal_value : r.dissipative;
    });
  }
  if (sel.delta_fC) run("delta_f_C", out.delta_f_C, Method::closed_form, [&] { return delta_f_C(pair); });
  if (sel.london) run("f_london", out.f_london, Method::closed_form, [&] { return f_london(pair); });
  if (sel.cp_farfield) run("f_cp_farfield", out.f_cp_farfield, Method::asymptotic, [&] { return f_cp_farfield(pair); });
  if (sel.noneq) run("f_noneq", out.f_noneq, Method::asymptotic, [&] { return f_noneq(pair); });
  if (sel.entanglement) {
    switch (sel.entanglement_form) {
      case EntanglementForm::isotropic_ladder:
        run("f_ent", out.f_ent, Method::ladder, [&] { return entanglement::f_ent_isotropic(pair); });
        break;
      case EntanglementForm::isotropic_nearfield:
        run("f_ent", out.f_ent, Method::asymptotic, [&] { return entanglement::f_ent_nearfield(pair); });
        break;
      case EntanglementForm::anisotropic_nearfield:
        run("f_ent", out.f_ent, Method::asymptotic, [&] { return entanglement::f_ent_anisotropic(pair); });
        break;
    }
  }
  return out;
}

/// Advisory validity of the asymptotic forms: near field for Omega z < 0.1, far
/// field for Omega z > 10 (Omega the smaller atomic frequency).
enum class Regime { near_field, intermediate, far_field };

inline Regime regime(const PairConfig& pair) {
  const double x = pair.omega_min() * pair.z;
  if (x < 0.1) return Regime::near_field;
  if (x > 10.0) return Regime::far_field;
  return Regime::intermediate;
}

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::near_field: return "near-field";
    case Regime::intermediate: return "intermediate";
    case Regime::far_field: return "far-field";
  }
  return "unknown";
}

}  // namespace atomforce::forces
