#pragma once

// Reference values built without the library's own machinery: hand-substituted
// closed forms, plain Simpson sums and central differences. Series
// coefficients were obtained independently with a computer-algebra system.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Taylor coefficients of the bracket polynomial P(x) = x(18-8x^2+x^4)cos 2x + (-9+16x^2-3x^4) sin 2x.
inline constexpr double P5 = -11.0 / 15, P7 = -46.0 / 105, P9 = 86.0 / 315, P11 = -284.0 / 6237;
/// Taylor coefficients of Phi(x).
inline constexpr double Phi8 = -4.0 / 9, Phi10 = 28.0 / 225, Phi12 = -22.0 / 1575;

/// Composite Simpson on [a, b] with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

/// Zero-temperature induced-dipole force via the imaginary axis:
///   -(2C/(pi z^4)) int dy (9+18y+16y^2+8y^3+3y^4+y^5) e^{-2y} / ((s1^2+y^2)(s2^2+y^2))
/// with y = s_min * sinh(t) to resolve the near-field peak.
inline double wick_force(double C, double w1, double w2, double z) {
  const double s1 = w1 * z, s2 = w2 * z, s = std::min(s1, s2);
  auto g = [&](double t) {
    const double y = s * std::sinh(t);
    const double poly = 9 + 18 * y + 16 * y * y + 8 * y * y * y + 3 * std::pow(y, 4) + std::pow(y, 5);
    return poly * std::exp(-2 * y) / ((s1 * s1 + y * y) * (s2 * s2 + y * y)) * s * std::cosh(t);
  };
  const double tmax = std::asinh(60.0 / s);
  return -2 * C / (pi * std::pow(z, 4)) * simpson(g, 0.0, tmax, 40000);
}

/// Central-difference (1/z) d/dz.
inline double ladder_fd(const std::function<double(double)>& f, double z, double h) {
  return (f(z + h) - f(z - h)) / (2 * h) / z;
}

/// [z^3 L^3 + 5 z L^2] g by nested central differences, Richardson-corrected in h.
inline double ent_kernel_fd(const std::function<double(double)>& g, double z, double h) {
  auto raw = [&](double hh) {
    auto L1 = [&](double x) { return ladder_fd(g, x, hh); };
    auto L2 = [&](double x) { return ladder_fd(L1, x, hh); };
    auto L3 = [&](double x) { return ladder_fd(L2, x, hh); };
    return z * z * z * L3(z) + 5 * z * L2(z);
  };
  return (4 * raw(h / 2) - raw(h)) / 3;
}

/// Bose occupation.
inline double bose(double x) { return 1.0 / (std::exp(x) - 1.0); }

/// Least-squares slope of (ln z, ln |f|).
inline double slope(const std::function<double(double)>& f, double lo, double hi, int n) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1);
    const double y = std::log(std::abs(f(std::exp(x))));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace oracle
