#pragma once

// Exact calculus on trigonometric series in (omega, z):
//
//   sum_i  c_i * omega^k_i * z^n_i * {1 | cos | sin}(m_i * omega * z)
//
// with rational c_i. This is enough to carry the derivative ladders
// (1/z d/dz)^n of the frequency-domain force integrands without any rounding.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atomforce/errors.hpp"

namespace atomforce::ladder {

using Rational = boost::multiprecision::cpp_rational;

enum class TrigKind { constant = 0, cosine = 1, sine = 2 };

struct TrigTerm {
  Rational coeff;
  int wpow = 0;   // power of omega
  int zpow = 0;   // power of z
  TrigKind kind = TrigKind::constant;
  unsigned freq = 0;  // m in cos(m omega z); 0 for constants

  auto key() const { return std::make_tuple(zpow, wpow, static_cast<int>(kind), freq); }
  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

class TrigSeries {
 public:
  TrigSeries() = default;

  static TrigSeries constant(Rational c, int wpow = 0, int zpow = 0) {
    return TrigSeries({TrigTerm{std::move(c), wpow, zpow, TrigKind::constant, 0}});
  }
  static TrigSeries cos(unsigned m, Rational c = 1, int wpow = 0, int zpow = 0) {
    return TrigSeries({TrigTerm{std::move(c), wpow, zpow, TrigKind::cosine, m}});
  }
  static TrigSeries sin(unsigned m, Rational c = 1, int wpow = 0, int zpow = 0) {
    return TrigSeries({TrigTerm{std::move(c), wpow, zpow, TrigKind::sine, m}});
  }

  explicit TrigSeries(std::vector<TrigTerm> terms) : terms_(std::move(terms)) { canonicalize(); }

  const std::vector<TrigTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend TrigSeries operator+(const TrigSeries& a, const TrigSeries& b) {
    std::vector<TrigTerm> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return TrigSeries(std::move(t));
  }

  friend TrigSeries operator-(const TrigSeries& a) {
    std::vector<TrigTerm> t = a.terms_;
    for (auto& term : t) term.coeff = -term.coeff;
    return TrigSeries(std::move(t));
  }

  friend TrigSeries operator-(const TrigSeries& a, const TrigSeries& b) { return a + (-b); }

  friend TrigSeries operator*(const Rational& s, const TrigSeries& a) {
    std::vector<TrigTerm> t = a.terms_;
    for (auto& term : t) term.coeff *= s;
    return TrigSeries(std::move(t));
  }

  /// Multiplies by omega^wpow z^zpow.
  TrigSeries shifted(int wpow, int zpow) const {
    std::vector<TrigTerm> t = terms_;
    for (auto& term : t) {
      term.wpow += wpow;
      term.zpow += zpow;
    }
    return TrigSeries(std::move(t));
  }

  /// Product with trig products reduced to sums of single harmonics.
  friend TrigSeries operator*(const TrigSeries& a, const TrigSeries& b) {
    std::vector<TrigTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size() * 2);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) multiply_into(x, y, out);
    }
    return TrigSeries(std::move(out));
  }

  friend bool operator==(const TrigSeries&, const TrigSeries&) = default;

  /// d/dz, exact.
  TrigSeries derivative() const {
    std::vector<TrigTerm> out;
    out.reserve(terms_.size() * 2);
    for (const auto& t : terms_) {
      if (t.zpow != 0) out.push_back({t.coeff * t.zpow, t.wpow, t.zpow - 1, t.kind, t.freq});
      if (t.kind == TrigKind::cosine) {
        out.push_back({-t.coeff * t.freq, t.wpow + 1, t.zpow, TrigKind::sine, t.freq});
      } else if (t.kind == TrigKind::sine) {
        out.push_back({t.coeff * t.freq, t.wpow + 1, t.zpow, TrigKind::cosine, t.freq});
      }
    }
    return TrigSeries(std::move(out));
  }

  /// Numerical value at (omega, z).
  template <class Real>
  Real evaluate(Real omega, Real z) const {
    Real sum = 0;
    for (const auto& t : terms_) {
      Real v = static_cast<Real>(t.coeff) * ipow(omega, t.wpow) * ipow(z, t.zpow);
      const Real arg = static_cast<Real>(t.freq) * omega * z;
      if (t.kind == TrigKind::cosine) v *= std::cos(arg);
      if (t.kind == TrigKind::sine) v *= std::sin(arg);
      sum += v;
    }
    return sum;
  }

  /// Human-readable term list, one term per line:
  ///   +18 w^1 z^1 cos(2wz)
  std::string to_string() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& t : terms_) os << format_term(t) << '\n';
    return os.str();
  }

  static std::string format_term(const TrigTerm& t) {
    std::ostringstream os;
    os << (t.coeff >= 0 ? "+" : "") << t.coeff.str() << " w^" << t.wpow << " z^" << t.zpow;
    if (t.kind == TrigKind::cosine) os << " cos(" << t.freq << "wz)";
    if (t.kind == TrigKind::sine) os << " sin(" << t.freq << "wz)";
    return os.str();
  }

 private:
  template <class Real>
  static Real ipow(Real x, int n) {
    Real r = 1;
    const bool inv = n < 0;
    for (int i = 0; i < std::abs(n); ++i) r *= x;
    return inv ? Real(1) / r : r;
  }

  static void multiply_into(const TrigTerm& x, const TrigTerm& y, std::vector<TrigTerm>& out) {
    const Rational c = x.coeff * y.coeff;
    const int wp = x.wpow + y.wpow;
    const int zp = x.zpow + y.zpow;
    if (x.kind == TrigKind::constant) {
      out.push_back({c, wp, zp, y.kind, y.freq});
      return;
    }
    if (y.kind == TrigKind::constant) {
      out.push_back({c, wp, zp, x.kind, x.freq});
      return;
    }
    const Rational half = c / 2;
    const unsigned sum = x.freq + y.freq;
    const unsigned diff = x.freq > y.freq ? x.freq - y.freq : y.freq - x.freq;
    // sign of sin((a - b) wz) once written with a nonnegative multiplier
    const int diff_sign = x.freq >= y.freq ? 1 : -1;
    if (x.kind == TrigKind::cosine && y.kind == TrigKind::cosine) {
      out.push_back({half, wp, zp, TrigKind::cosine, diff});
      out.push_back({half, wp, zp, TrigKind::cosine, sum});
    } else if (x.kind == TrigKind::sine && y.kind == TrigKind::sine) {
      out.push_back({half, wp, zp, TrigKind::cosine, diff});
      out.push_back({-half, wp, zp, TrigKind::cosine, sum});
    } else if (x.kind == TrigKind::sine) {  // sin a cos b
      out.push_back({half, wp, zp, TrigKind::sine, sum});
      out.push_back({half * diff_sign, wp, zp, TrigKind::sine, diff});
    } else {  // cos a sin b = sin b cos a
      out.push_back({half, wp, zp, TrigKind::sine, sum});
      out.push_back({-half * diff_sign, wp, zp, TrigKind::sine, diff});
    }
  }

  void canonicalize() {
    for (auto& t : terms_) {
      if (t.kind == TrigKind::cosine && t.freq == 0) t.kind = TrigKind::constant;
      if (t.kind == TrigKind::constant) t.freq = 0;
      if (t.kind == TrigKind::sine && t.freq == 0) t.coeff = 0;
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const TrigTerm& a, const TrigTerm& b) { return a.key() < b.key(); });
    std::vector<TrigTerm> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().key() == t.key()) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const TrigTerm& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
  }

  std::vector<TrigTerm> terms_;
};

/// (1/z d/dz)^n s, exact.
inline TrigSeries ladder_apply(const TrigSeries& s, int n) {
  if (n < 0) throw DomainError("ladder_apply: n must be >= 0");
  TrigSeries r = s;
  for (int i = 0; i < n; ++i) r = r.derivative().shifted(0, -1);
  return r;
}

inline bool series_equal(const TrigSeries& a, const TrigSeries& b) { return a == b; }

/// Taylor/Laurent coefficients about z = 0: (zpow, wpow) -> coefficient, for
/// all monomials with zpow <= max_zpow.
inline std::map<std::pair<int, int>, Rational> expand_about_zero(const TrigSeries& s, int max_zpow) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& t : s.terms()) {
    if (t.kind == TrigKind::constant) {
      if (t.zpow <= max_zpow) out[{t.zpow, t.wpow}] += t.coeff;
      continue;
    }
    // cos(m w z) = sum_j (-1)^j (m w z)^{2j} / (2j)!, sin likewise with odd powers.
    const int start = t.kind == TrigKind::cosine ? 0 : 1;
    Rational mpow = 1;     // m^p
    Rational fact = 1;     // p!
    for (int p = 0; t.zpow + p <= max_zpow; ++p) {
      if (p > 0) {
        mpow *= t.freq;
        fact *= p;
      }
      if (p < start || (p - start) % 2 != 0) continue;
      const int j = (p - start) / 2;
      const Rational sign = (j % 2 == 0) ? 1 : -1;
      out[{t.zpow + p, t.wpow + p}] += t.coeff * sign * mpow / fact;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// The combined finite-temperature integrand polynomial, in closed form:
///   w z (18 - 8 z^2 w^2 + z^4 w^4) cos 2wz + (-9 + 16 w^2 z^2 - 3 w^4 z^4) sin 2wz
/// Coefficients may be overridden (negative control for the verify command).
struct FcTargetCoefficients {
  std::array<Rational, 3> cos_part{18, -8, 1};   // multiplies (wz)^1, (wz)^3, (wz)^5
  std::array<Rational, 3> sin_part{-9, 16, -3};  // multiplies (wz)^0, (wz)^2, (wz)^4
};

inline TrigSeries fc_target_integrand(const FcTargetCoefficients& c = {}) {
  TrigSeries s;
  for (int i = 0; i < 3; ++i) {
    s = s + TrigSeries::cos(2, c.cos_part[i], 2 * i + 1, 2 * i + 1);
    s = s + TrigSeries::sin(2, c.sin_part[i], 2 * i, 2 * i);
  }
  return s;
}

/// Where bracket factors such as [2 z^4] sit relative to the two ladders.
enum class BracketPlacement {
  post_differentiation,  // multiplied in after all derivatives, then z1 = z2 = z
  inside_z2_ladder       // attached to the z2 factor before the z2 ladder acts
};

inline const char* to_string(BracketPlacement p) {
  return p == BracketPlacement::post_differentiation
             ? "brackets are post-differentiation factors in z (constant under both ladders)"
             : "brackets are attached to the z2 factor inside the z2 ladder";
}

struct LadderPiece {
  Rational weight;  // overall rational factor (1/2 for the symmetrised piece)
  int n2 = 0;       // power of the z2 ladder
  int n1 = 0;       // power of the z1 ladder
  Rational bracket_coeff;
  int bracket_zpow = 0;
};

/// The four pieces of the induced-dipole force: C1 (two symmetrised terms), C2, C3, C4.
inline std::vector<LadderPiece> fc_ladder_pieces() {
  return {
      {Rational(1, 2), 3, 2, 2, 4},  // C1
      {Rational(1, 2), 2, 3, 2, 4},  // C1
      {1, 2, 2, 8, 2},               // C2
      {1, 3, 1, 4, 2},               // C3
      {1, 2, 1, 20, 0},              // C4
  };
}

/// Sum of the ladder pieces applied to (1/(z1 z2)) sin(w z2) cos(w z1), evaluated
/// at z1 = z2 = z. The base function separates, so each ladder acts on its own factor.
inline TrigSeries fc_ladder_sum(BracketPlacement placement) {
  const TrigSeries f1 = TrigSeries::cos(1, 1, 0, -1);  // cos(w z1) / z1
  const TrigSeries f2 = TrigSeries::sin(1, 1, 0, -1);  // sin(w z2) / z2
  TrigSeries total;
  for (const auto& p : fc_ladder_pieces()) {
    const TrigSeries bracket = TrigSeries::constant(p.bracket_coeff, 0, p.bracket_zpow);
    TrigSeries piece;
    if (placement == BracketPlacement::post_differentiation) {
      piece = ladder_apply(f1, p.n1) * ladder_apply(f2, p.n2) * bracket;
    } else {
      piece = ladder_apply(f1, p.n1) * ladder_apply(f2 * bracket, p.n2);
    }
    total = total + p.weight * piece;
  }
  return total;
}

struct TermDiff {
  TrigTerm term;
  std::string side;  // "derived-only", "target-only", or "coefficient"
};

struct FcDerivation {
  TrigSeries derived;  // z * (ladder sum) * z^7, the -2/pi factor held outside
  TrigSeries target;
  BracketPlacement placement = BracketPlacement::post_differentiation;
  bool matched = false;
  std::vector<TermDiff> mismatch;  // empty when matched
};

inline std::vector<TermDiff> diff_terms(const TrigSeries& derived, const TrigSeries& target) {
  std::map<decltype(TrigTerm{}.key()), std::pair<const TrigTerm*, const TrigTerm*>> by_key;
  for (const auto& t : derived.terms()) by_key[t.key()].first = &t;
  for (const auto& t : target.terms()) by_key[t.key()].second = &t;
  std::vector<TermDiff> out;
  for (const auto& [key, pair] : by_key) {
    const auto* d = pair.first;
    const auto* g = pair.second;
    if (d && !g) out.push_back({*d, "derived-only"});
    if (!d && g) out.push_back({*g, "target-only"});
    if (d && g && d->coeff != g->coeff) {
      TrigTerm t = *d;
      t.coeff = d->coeff - g->coeff;
      out.push_back({t, "coefficient"});
    }
  }
  return out;
}

/// Runs the four ladders, combines them and compares against the reference
/// integrand. The post-differentiation bracket placement is tried first and the
/// alternate placement only on mismatch.
inline FcDerivation derive_fc_integrand(const FcTargetCoefficients& target_coeffs = {}) {
  const TrigSeries target = fc_target_integrand(target_coeffs);
  FcDerivation first;
  for (const auto placement : {BracketPlacement::post_differentiation, BracketPlacement::inside_z2_ladder}) {
    FcDerivation d;
    d.placement = placement;
    d.target = target;
    d.derived = fc_ladder_sum(placement).shifted(0, 8);  // overall z prefactor, then z^7
    d.matched = series_equal(d.derived, target);
    if (!d.matched) d.mismatch = diff_terms(d.derived, target);
    if (d.matched) return d;
    if (placement == BracketPlacement::post_differentiation) first = std::move(d);
  }
  return first;
}

/// [z^3 L^3 + 5 z L^2](g / z), L = (1/z) d/dz.
inline TrigSeries derive_ent_kernel(const TrigSeries& g) {
  const TrigSeries h = g.shifted(0, -1);
  return ladder_apply(h, 3).shifted(0, 3) + Rational(5) * ladder_apply(h, 2).shifted(0, 1);
}

/// Conjugate partner of a series in the 2wz harmonics: cos -> -sin, sin -> cos.
/// For P = Im[a(x) e^{2ix}] this returns Re[a(x) e^{2ix}].
inline TrigSeries quadrature_partner(const TrigSeries& s) {
  std::vector<TrigTerm> out;
  for (auto t : s.terms()) {
    if (t.kind == TrigKind::cosine) {
      t.kind = TrigKind::sine;
      t.coeff = -t.coeff;
    } else if (t.kind == TrigKind::sine) {
      t.kind = TrigKind::cosine;
    } else {
      throw DomainError("quadrature_partner: constant terms have no conjugate harmonic");
    }
    out.push_back(std::move(t));
  }
  return TrigSeries(std::move(out));
}

/// Floating-point copy for hot loops. Only valid for series that are
/// homogeneous in (w z), so they can be evaluated as functions of x = w z.
template <class Real>
class CompiledSeries {
 public:
  CompiledSeries() = default;
  explicit CompiledSeries(const TrigSeries& s) {
    for (const auto& t : s.terms()) {
      if (t.wpow != t.zpow) throw DomainError("CompiledSeries: series is not a function of w z alone");
      terms_.push_back({static_cast<Real>(t.coeff), t.zpow, t.kind, static_cast<Real>(t.freq)});
    }
  }

  Real operator()(Real x) const {
    Real sum = 0;
    for (const auto& t : terms_) {
      Real v = t.c;
      for (int i = 0; i < t.pow; ++i) v *= x;
      if (t.kind == TrigKind::cosine) v *= std::cos(t.freq * x);
      if (t.kind == TrigKind::sine) v *= std::sin(t.freq * x);
      sum += v;
    }
    return sum;
  }

  struct Term {
    Real c;
    int pow;
    TrigKind kind;
    Real freq;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

}  // namespace atomforce::ladder
