#pragma once

// Real-frequency quadrature for the induced-dipole force, plus an independent
// imaginary-frequency evaluation of the same force at zero temperature.
//
// Everything is done in the scaled variable x = omega z, where the integrand
// reads coth(b x) P(x) e^{-eps x} / ((s1^2 - x^2)(s2^2 - x^2)) with s_a = Omega_a z,
// b = beta / (2 z) and eps = eta / z. The range [0, X] is integrated with
// adaptive Gauss-Kronrod panels; the tail [X, inf) is summed analytically.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "atomforce/errors.hpp"
#include "atomforce/ladder.hpp"
#include "atomforce/model.hpp"

namespace atomforce::quadrature {

using Real = long double;

struct QuadratureSpec {
  std::vector<double> eta_ladder;     // decreasing, 1/eV; empty: derived from the pair
  std::optional<double> pole_window;  // eV; unset: min(O1, O2, |O1 - O2|) / 8
  double panel_tol = 1e-6;
  int max_panels = 100000;

  void validate() const {
    if (!(panel_tol > 0.0) || panel_tol >= 1.0) throw ConfigError("panel_tol must be in (0, 1)");
    if (max_panels < 16) throw ConfigError("max_panels must be >= 16");
    for (std::size_t i = 0; i < eta_ladder.size(); ++i) {
      if (!(eta_ladder[i] > 0.0)) throw ConfigError("eta_ladder entries must be > 0");
      if (i > 0 && !(eta_ladder[i] < eta_ladder[i - 1])) {
        throw ConfigError("eta_ladder must be strictly decreasing");
      }
    }
    if (eta_ladder.size() == 1) throw ConfigError("eta_ladder needs at least two rungs");
    if (pole_window && !(*pole_window > 0.0)) throw ConfigError("pole_window must be > 0");
  }
};

/// Rungs used when none are configured: eta0, eta0/2, eta0/4 with eta0 taken from
/// the bath or 2e-3 / Omega_max.
inline std::vector<double> default_eta_ladder(const PairConfig& pair) {
  const double eta0 = pair.bath.uv_eta.value_or(2e-3 / pair.omega_max());
  return {eta0, eta0 / 2, eta0 / 4};
}

inline double pole_window_limit(const PairConfig& pair) {
  return std::min({pair.atom1.omega, pair.atom2.omega, std::abs(pair.atom1.omega - pair.atom2.omega)}) / 4;
}

inline double resolve_pole_window(const PairConfig& pair, const QuadratureSpec& spec) {
  const double limit = pole_window_limit(pair);
  const double w = spec.pole_window.value_or(limit / 2);
  if (!(w < limit)) {
    throw ConfigError("pole_window must be smaller than min(Omega_1, Omega_2, |Omega_1 - Omega_2|)/4");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Adaptive panel engine

namespace detail {

using GK = boost::math::quadrature::gauss_kronrod<Real, 31>;

/// A regular panel integrates F(a..b); a folded panel integrates F(c + u) + F(c - u)
/// for u in [a, b], which is the principal value about the pole at c.
struct Panel {
  Real a = 0, b = 0;
  bool folded = false;
  Real center = 0;
  Real value = 0, error = 0, l1 = 0;
  bool operator<(const Panel& o) const { return error < o.error; }
};

struct PanelResult {
  Real value = 0;
  Real error = 0;
  Real l1 = 0;
  int panels = 0;
  bool converged = true;
};

/// `eval(center, offset)` returns the integrand at center + offset. Passing the
/// two pieces separately lets the caller form (s - x) without cancellation.
template <class Eval>
void evaluate_panel(Panel& p, const Eval& eval) {
  Real err = 0, l1 = 0;
  if (p.folded) {
    auto g = [&](Real u) { return eval(p.center, u) + eval(p.center, -u); };
    p.value = GK::integrate(g, p.a, p.b, 0, 0, &err);
    // The roundoff scale is set by the two halves, not by their cancelling sum.
    auto m = [&](Real u) { return std::abs(eval(p.center, u)) + std::abs(eval(p.center, -u)); };
    l1 = GK::integrate(m, p.a, p.b, 0, 0);
  } else {
    auto g = [&](Real x) { return eval(x, Real(0)); };
    p.value = GK::integrate(g, p.a, p.b, 0, 0, &err, &l1);
  }
  p.error = err;
  p.l1 = l1;
}

/// Global adaptive refinement: bisect the worst panel until the summed error is
/// below max(target(sum), roundoff floor) or the panel budget is spent.
template <class Eval, class Target>
PanelResult refine(std::vector<Panel> seeds, const Eval& eval, const Target& target, int max_panels) {
  std::priority_queue<Panel> heap;
  PanelResult r;
  for (auto& p : seeds) {
    evaluate_panel(p, eval);
    r.value += p.value;
    r.error += p.error;
    r.l1 += p.l1;
    heap.push(p);
  }
  r.panels = static_cast<int>(heap.size());
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  while (!heap.empty()) {
    const Real goal = std::max(target(r.value), 256 * eps * r.l1);
    if (r.error <= goal) break;
    if (r.panels + 1 > max_panels) {
      r.converged = false;
      break;
    }
    Panel worst = heap.top();
    heap.pop();
    r.value -= worst.value;
    r.error -= worst.error;
    r.l1 -= worst.l1;
    const Real mid = (worst.a + worst.b) / 2;
    Panel left = worst, right = worst;
    left.b = mid;
    right.a = mid;
    evaluate_panel(left, eval);
    evaluate_panel(right, eval);
    for (const auto* p : {&left, &right}) {
      r.value += p->value;
      r.error += p->error;
      r.l1 += p->l1;
    }
    heap.push(left);
    heap.push(right);
    ++r.panels;
  }
  r.error = std::max(r.error, Real(0));
  return r;
}

/// Regular panels of width <= max_width covering [a, b].
inline void seed_regular(std::vector<Panel>& out, Real a, Real b, Real max_width) {
  if (!(b > a)) return;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  for (int i = 0; i < n; ++i) {
    Panel p;
    p.a = a + (b - a) * i / n;
    p.b = (i + 1 == n) ? b : a + (b - a) * (i + 1) / n;
    out.push_back(p);
  }
}

inline void seed_folded(std::vector<Panel>& out, Real center, Real half_width, Real max_width) {
  const int n = std::max(1, static_cast<int>(std::ceil(half_width / max_width)));
  for (int i = 0; i < n; ++i) {
    Panel p;
    p.folded = true;
    p.center = center;
    p.a = half_width * i / n;
    p.b = (i + 1 == n) ? half_width : half_width * (i + 1) / n;
    out.push_back(p);
  }
}

/// Seeds [lo, hi] with folded windows around each pole; poles must be sorted,
/// inside (lo, hi) and their windows disjoint.
inline std::vector<Panel> seed_with_poles(Real lo, Real hi, const std::vector<Real>& poles, Real half_width,
                                          Real max_width) {
  std::vector<Panel> seeds;
  Real cursor = lo;
  for (Real s : poles) {
    seed_regular(seeds, cursor, s - half_width, max_width);
    seed_folded(seeds, s, half_width, max_width);
    cursor = s + half_width;
  }
  seed_regular(seeds, cursor, hi, max_width);
  return seeds;
}

/// Residue of f at a simple pole s from symmetric stencils at h, h/2, h/4 with one
/// Richardson step. Throws NumericalError when the two extrapolants disagree by > 1%.
template <class F>
Real estimate_residue(const F& f, Real s, Real h) {
  auto raw = [&](Real u) { return u * (f(s + u) - f(s - u)) / 2; };
  const Real r1 = raw(h), r2 = raw(h / 2), r4 = raw(h / 4);
  const Real e1 = (4 * r2 - r1) / 3;
  const Real e2 = (4 * r4 - r2) / 3;
  const Real scale = std::abs(e2) + 1e-12L * (std::abs(r1) + std::abs(r2) + std::abs(r4));
  if (std::abs(e1 - e2) > 0.01L * scale) {
    throw NumericalError("residue estimate unstable at pole " + std::to_string(static_cast<double>(s)));
  }
  return e2;
}

}  // namespace detail

struct PvResult {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> residues;  // one per pole, numerical estimates
  int panels = 0;
};

/// Principal value of int_lower^upper f over simple real poles. `upper` may be
/// infinite; the part beyond the last pole is then done by exp-sinh quadrature.
/// `half_width` is the symmetric exclusion window around each pole.
inline PvResult pv_integral(const std::function<Real(Real)>& f, std::vector<double> poles, double half_width,
                            double panel_tol = 1e-10, int max_panels = 100000, double lower = 0.0,
                            double upper = std::numeric_limits<double>::infinity()) {
  if (!(half_width > 0.0)) throw ConfigError("pv_integral: window must be > 0");
  std::sort(poles.begin(), poles.end());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (poles[i] - half_width <= lower || poles[i] + half_width >= upper) {
      throw ConfigError("pv_integral: pole window leaves the integration range");
    }
    if (i > 0 && poles[i] - poles[i - 1] <= 2 * half_width) {
      throw ConfigError("pv_integral: poles closer than two window widths");
    }
  }
  PvResult out;
  for (double s : poles) {
    out.residues.push_back(static_cast<double>(detail::estimate_residue(f, Real(s), Real(half_width) / 4)));
  }

  const Real span = poles.empty() ? Real(1) : Real(poles.back() - lower);
  Real finite_hi = upper;
  Real tail = 0, tail_err = 0;
  if (std::isinf(upper)) {
    finite_hi = poles.empty() ? Real(lower) + 1 : Real(poles.back()) + std::max(Real(half_width), span);
    boost::math::quadrature::exp_sinh<Real> es;
    Real l1 = 0;
    tail = es.integrate([&](Real t) { return f(finite_hi + t); }, Real(panel_tol) / 10, &tail_err, &l1);
  }
  std::vector<Real> lpoles(poles.begin(), poles.end());
  auto seeds = detail::seed_with_poles(Real(lower), finite_hi, lpoles, Real(half_width),
                                       std::max(Real(half_width), (finite_hi - Real(lower)) / 64));
  auto eval = [&](Real c, Real u) { return f(c + u); };
  const Real tol = panel_tol;
  auto target = [&](Real v) { return tol * std::abs(v + tail); };
  auto r = detail::refine(std::move(seeds), eval, target, max_panels);
  if (!r.converged) throw ConvergenceError("pv_integral: panel budget exhausted");
  if (!std::isfinite(r.value + tail) || !std::isfinite(r.error + tail_err)) {
    throw NumericalError("pv_integral: non-finite result; the integrand may have a non-simple pole");
  }
  out.value = static_cast<double>(r.value + tail);
  out.error = static_cast<double>(r.error + tail_err);
  out.panels = r.panels;
  return out;
}

// ---------------------------------------------------------------------------
// The induced-dipole integral

struct QuadratureDiagnostics {
  std::vector<double> eta_ladder;
  std::vector<double> rung_values;  // dissipative force at each rung (eV^2)
  double extrapolated = 0.0;
  double spread = 0.0;              // change of the extrapolant when the last rung is added
  double error_estimate = 0.0;      // panel error summed over rungs (eV^2)
  int max_panels_used = 0;
  double pole_window = 0.0;
  double cutoff_x = 0.0;            // x = omega z where the analytic tail takes over
};

struct FcIntegral {
  double dissipative = 0.0;      // PV + resonance lines: the retarded (infinitesimal-dissipation) value
  double principal_value = 0.0;  // real part only
  double resonance_lines = 0.0;  // contribution of the delta lines at Omega_1, Omega_2 (eta -> 0)
  QuadratureDiagnostics diagnostics;
};

namespace detail {

/// P(x) and its conjugate harmonic Q(x) as functions of x = omega z, with the
/// small-x region served by Taylor series to avoid 0/0 cancellation.
class BracketPolynomial {
 public:
  explicit BracketPolynomial(const ladder::TrigSeries& p)
      : p_(p), q_(ladder::quadrature_partner(p)) {
    for (const auto& [key, c] : ladder::expand_about_zero(p, series_order)) {
      p_series_.push_back({static_cast<Real>(c), key.first});
    }
    for (const auto& t : p.terms()) {
      // Im[a(x) e^{2ix}] = Re(a) sin 2x + Im(a) cos 2x
      const std::size_t k = static_cast<std::size_t>(t.zpow);
      if (coeffs_.size() <= k) coeffs_.resize(k + 1);
      if (t.kind == ladder::TrigKind::sine) coeffs_[k] += std::complex<Real>(static_cast<Real>(t.coeff), 0);
      if (t.kind == ladder::TrigKind::cosine) coeffs_[k] += std::complex<Real>(0, static_cast<Real>(t.coeff));
      if (t.kind == ladder::TrigKind::constant || t.freq != 2) {
        throw DomainError("bracket polynomial must be built from 2wz harmonics only");
      }
    }
  }

  Real P(Real x) const {
    if (std::abs(x) < series_radius) {
      Real s = 0;
      for (const auto& [c, k] : p_series_) s += c * std::pow(x, k);
      return s;
    }
    return p_(x);
  }

  Real Q(Real x) const { return q_(x); }

  /// a(x) with P = Im[a(x) e^{2ix}], coefficients of x^k.
  const std::vector<std::complex<Real>>& a_coeffs() const { return coeffs_; }

 private:
  static constexpr int series_order = 31;
  static constexpr Real series_radius = 0.1L;
  ladder::CompiledSeries<Real> p_;
  ladder::CompiledSeries<Real> q_;
  std::vector<std::pair<Real, int>> p_series_;
  std::vector<std::complex<Real>> coeffs_;
};

inline const BracketPolynomial& bracket() {
  static const BracketPolynomial b(ladder::derive_fc_integrand().derived);
  return b;
}

/// E_n(w) for complex w with Re w >= 0, |w| large, by modified Lentz on the
/// continued fraction.
inline std::complex<Real> expint_en(int n, std::complex<Real> w) {
  using C = std::complex<Real>;
  constexpr Real tiny = 1e-300L;
  constexpr Real eps = 4 * std::numeric_limits<Real>::epsilon();
  C b = w + Real(n);
  C c = C(1 / tiny);
  C d = Real(1) / b;
  C h = d;
  for (int i = 1; i < 10000; ++i) {
    const Real an = -Real(i) * Real(n - 1 + i);
    b += Real(2);
    d = Real(1) / (an * d + b);
    c = b + an / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - Real(1)) < eps) return h * std::exp(-w);
  }
  throw ConvergenceError("exponential integral continued fraction did not converge");
}

/// int_X^inf x^m e^{-a x} dx for Re a > 0 (or Re a = 0 in the Abel sense).
inline std::complex<Real> power_exp_tail(int m, std::complex<Real> a, Real X) {
  using C = std::complex<Real>;
  if (m >= 0) {
    // e^{-aX} sum_k m!/(m-k)! X^{m-k} / a^{k+1}
    C sum = 0;
    C term = Real(1) / a;
    Real falling = 1;
    for (int k = 0; k <= m; ++k) {
      sum += falling * std::pow(X, m - k) * term;
      falling *= Real(m - k);
      term /= a;
    }
    return sum * std::exp(-a * X);
  }
  const int n = -m;
  return std::pow(X, Real(1 - n)) * expint_en(n, a * X);
}

struct ScaledProblem {
  Real s1, s2;  // Omega_a z
  Real b;       // beta / (2 z); 0 at zero temperature
  bool zero_t;
  Real X;       // start of the analytic tail

  Real coth(Real x) const { return zero_t ? Real(1) : Real(1) / std::tanh(b * x); }
};

inline Real tail_integral(const ScaledProblem& sp, Real eps) {
  using C = std::complex<Real>;
  const auto& a = bracket().a_coeffs();
  // R(x) = sum_k d_k x^{-4-2k}
  const Real r = std::max(sp.s1, sp.s2) / sp.X;
  int kmax = 4;
  while (kmax < 200 && (kmax + 1) * std::pow(r, 2 * kmax) > 1e-22L) ++kmax;
  std::vector<Real> d(kmax + 1);
  const Real u1 = sp.s1 * sp.s1, u2 = sp.s2 * sp.s2;
  for (int k = 0; k <= kmax; ++k) {
    Real sum = 0, p1 = 1;
    for (int j = 0; j <= k; ++j) {
      sum += p1 * std::pow(u2, k - j);
      p1 *= u1;
    }
    d[k] = sum;
  }
  // coth(bx) = 1 + 2 sum_n e^{-2nbx}
  int nmax = 0;
  if (!sp.zero_t) {
    nmax = static_cast<int>(std::ceil(52.0L / (2 * sp.b * sp.X)));
    if (nmax > 20000) throw ConvergenceError("thermal tail needs too many terms; temperature too high for this z");
  }
  Real total = 0;
  for (int n = 0; n <= nmax; ++n) {
    const C rate(eps + 2 * n * sp.b, -2);
    C acc = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (a[p] == C(0)) continue;
      for (int k = 0; k <= kmax; ++k) {
        acc += a[p] * d[k] * power_exp_tail(static_cast<int>(p) - 4 - 2 * k, rate, sp.X);
      }
    }
    total += (n == 0 ? 1 : 2) * acc.imag();
  }
  return total;
}

/// pi * sum_a coth(b s_a) Q(s_a) e^{-eps s_a} / (2 s_a (s_other^2 - s_a^2))
inline Real resonance_lines(const ScaledProblem& sp, Real eps) {
  const auto& br = bracket();
  auto line = [&](Real s, Real other) {
    return sp.coth(s) * br.Q(s) * std::exp(-eps * s) / (2 * s * (other * other - s * s));
  };
  return std::numbers::pi_v<Real> * (line(sp.s1, sp.s2) + line(sp.s2, sp.s1));
}

struct RungResult {
  Real pv = 0;
  Real lines = 0;
  Real error = 0;
  int panels = 0;
};

inline RungResult integrate_rung(const ScaledProblem& sp, Real eps, Real half_width, const QuadratureSpec& spec) {
  const auto& br = bracket();
  // Differences s_a - x are formed as (s_a - c) - u so the folded windows are exact.
  auto eval = [&](Real c, Real u) {
    const Real x = c + u;
    const Real d1 = (sp.s1 - c) - u, d2 = (sp.s2 - c) - u;
    const Real denom = d1 * (sp.s1 + x) * d2 * (sp.s2 + x);
    return sp.coth(x) * br.P(x) * std::exp(-eps * x) / denom;
  };
  std::vector<Real> poles{std::min(sp.s1, sp.s2), std::max(sp.s1, sp.s2)};
  auto seeds = seed_with_poles(0, sp.X, poles, half_width, Real(1));
  RungResult out;
  out.lines = resonance_lines(sp, eps);
  const Real tail = tail_integral(sp, eps);
  const Real tol = spec.panel_tol;
  const Real lines = out.lines;
  // Accuracy is judged against the dissipative sum, which is far smaller than
  // either of its parts in the far field.
  auto target = [&](Real v) { return tol * std::abs(v + tail + lines) / 4; };
  auto r = refine(std::move(seeds), eval, target, spec.max_panels);
  if (!r.converged) throw ConvergenceError("integrate_fc: panel budget exhausted before reaching panel_tol");
  if (!std::isfinite(r.value) || !std::isfinite(tail)) throw NumericalError("integrate_fc: non-finite panel sum");
  out.pv = r.value + tail;
  out.error = r.error;
  out.panels = r.panels;
  return out;
}

/// Neville extrapolation of values sampled at h_i to h = 0.
inline Real extrapolate_to_zero(const std::vector<Real>& h, std::vector<Real> v) {
  const std::size_t n = v.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = n - 1; i >= m; --i) {
      v[i] = (h[i - m] * v[i] - h[i] * v[i - 1]) / (h[i - m] - h[i]);
      if (i == m) break;
    }
  }
  return v[n - 1];
}

}  // namespace detail

/// C = q1^2 q2^2 / (16 pi^2 mu1 mu2), the common coupling prefactor (alpha1 alpha2 times the
/// two resonance denominators).
inline double coupling_product(const PairConfig& pair) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return pair.atom1.q * pair.atom1.q * pair.atom2.q * pair.atom2.q / (16 * pi2 * pair.atom1.mu * pair.atom2.mu);
}

/// Induced-dipole force from the real-frequency integral with the coth(beta omega/2)
/// weight, extrapolated over the eta ladder. Attractive sign convention.
inline FcIntegral integrate_fc(const PairConfig& pair, const QuadratureSpec& spec = {}) {
  pair.validate();
  spec.validate();
  pair.require_nondegenerate("integrate_fc");
  const double window = resolve_pole_window(pair, spec);
  const std::vector<double> ladder_eta = spec.eta_ladder.empty() ? default_eta_ladder(pair) : spec.eta_ladder;

  const Real z = pair.z;
  detail::ScaledProblem sp;
  sp.s1 = Real(pair.atom1.omega) * z;
  sp.s2 = Real(pair.atom2.omega) * z;
  sp.zero_t = pair.bath.beta.is_zero();
  sp.b = sp.zero_t ? Real(0) : Real(pair.bath.beta.beta()) / (2 * z);
  sp.X = std::max<Real>(4 * std::max(sp.s1, sp.s2), 30);
  const Real half_width = Real(window) * z;

  // force = (2 C / (pi z^4)) * J
  const Real scale = 2 * Real(coupling_product(pair)) / (std::numbers::pi_v<Real> * z * z * z * z);

  std::vector<Real> hs, dissipative;
  QuadratureDiagnostics diag;
  diag.eta_ladder = ladder_eta;
  diag.pole_window = window;
  diag.cutoff_x = static_cast<double>(sp.X);
  Real err = 0;
  for (double eta : ladder_eta) {
    const Real eps = Real(eta) / z;
    const auto rung = detail::integrate_rung(sp, eps, half_width, spec);
    hs.push_back(eps);
    dissipative.push_back(rung.pv + rung.lines);
    diag.rung_values.push_back(static_cast<double>(scale * (rung.pv + rung.lines)));
    diag.max_panels_used = std::max(diag.max_panels_used, rung.panels);
    err += rung.error;
  }
  const Real full = detail::extrapolate_to_zero(hs, dissipative);
  const Real partial = detail::extrapolate_to_zero(std::vector<Real>(hs.begin(), hs.end() - 1),
                                                   std::vector<Real>(dissipative.begin(), dissipative.end() - 1));
  const Real spread = std::abs(full - partial);
  diag.extrapolated = static_cast<double>(scale * full);
  diag.spread = static_cast<double>(scale * spread);
  diag.error_estimate = static_cast<double>(scale * err);
  if (spread > 10 * Real(spec.panel_tol) * std::abs(full) + 3 * err) {
    throw ConvergenceError("integrate_fc: eta extrapolation did not settle (relative spread " +
                           std::to_string(static_cast<double>(spread / std::abs(full))) + ")");
  }
  // Far out the result is a tiny remainder of O(1) parts; stop once roundoff dominates.
  if (err > Real(1e-2) * std::abs(full)) {
    throw ConvergenceError("integrate_fc: Omega z too large for working precision (estimated relative error " +
                           std::to_string(static_cast<double>(err / std::abs(full))) + "); use the cp far-field form");
  }
  const Real lines0 = detail::resonance_lines(sp, 0);
  FcIntegral out;
  out.dissipative = static_cast<double>(scale * full);
  out.resonance_lines = static_cast<double>(scale * lines0);
  out.principal_value = static_cast<double>(scale * (full - lines0));
  out.diagnostics = std::move(diag);
  return out;
}

/// Zero-temperature induced-dipole force from the Wick-rotated integral
///   -(2 C / (pi z^4)) int_0^inf dy (9 + 18y + 16y^2 + 8y^3 + 3y^4 + y^5) e^{-2y} / ((s1^2 + y^2)(s2^2 + y^2)).
inline double cp_imaginary_frequency_oracle(const PairConfig& pair) {
  pair.validate();
  if (!pair.bath.beta.is_zero()) {
    throw UnsupportedError("imaginary-frequency oracle is implemented for zero field temperature only");
  }
  const double z = pair.z;
  const double s1 = pair.atom1.omega * z, s2 = pair.atom2.omega * z;
  auto f = [&](double y) {
    const double poly = 9 + y * (18 + y * (16 + y * (8 + y * (3 + y))));
    return poly * std::exp(-2 * y) / ((s1 * s1 + y * y) * (s2 * s2 + y * y));
  };
  // Geometric panels resolve the y ~ s scale in the near field.
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double lo = 0, hi = std::min({s1, s2, 1.0}) / 8;
  double sum = 0;
  while (lo < 60) {
    sum += GK::integrate(f, lo, std::min(hi, 60.0), 8, 1e-14);
    lo = hi;
    hi *= 2;
  }
  return -2 * coupling_product(pair) / (std::numbers::pi * z * z * z * z) * sum;
}

}  // namespace atomforce::quadrature
