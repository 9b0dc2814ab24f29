#pragma once

// Quasi-static separation dynamics M z'' = f(z). The force is the static-separation
// force evaluated at the instantaneous z; self-energy and radiation-reaction
// terms are not part of it, so this is an approximation for slow atoms.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atomforce/dispersion_forces.hpp"
#include "atomforce/errors.hpp"
#include "atomforce/model.hpp"

namespace atomforce::dynamics {

struct TrajectoryState {
  double t = 0.0;  // 1/eV
  double z = 0.0;  // 1/eV
  double v = 0.0;  // units of c
  double f = 0.0;  // eV^2
};

enum class HaltReason { t_max, z_min, force_error };

inline const char* to_string(HaltReason r) {
  switch (r) {
    case HaltReason::t_max: return "t_max";
    case HaltReason::z_min: return "z_min";
    case HaltReason::force_error: return "force_error";
  }
  return "unknown";
}

struct Trajectory {
  std::vector<TrajectoryState> states;
  HaltReason halt = HaltReason::t_max;
  std::vector<std::string> warnings;
  std::optional<std::string> error;  // set when halt == force_error
};

struct IntegrationSettings {
  double z0 = 0.0;
  double v0 = 0.0;
  double dt = 0.0;
  double t_max = 0.0;
  std::optional<double> z_min;  // default 1e-2 / Omega_min
  double speed_warning = 0.1;
};

using ForceFn = std::function<double(double)>;

/// Velocity Verlet for mass `mass` under `force(z)`.
inline Trajectory integrate(const ForceFn& force, double mass, const IntegrationSettings& s, double z_min) {
  if (!(mass > 0.0)) throw ConfigError("trajectory mass must be > 0");
  if (!(s.dt > 0.0)) throw ConfigError("trajectory dt must be > 0");
  if (!(s.t_max > 0.0)) throw ConfigError("trajectory t_max must be > 0");
  if (!(s.z0 > z_min)) throw DomainError("trajectory z0 must exceed z_min");

  Trajectory out;
  TrajectoryState st{0.0, s.z0, s.v0, 0.0};
  try {
    st.f = force(st.z);
  } catch (const Error& e) {
    out.halt = HaltReason::force_error;
    out.error = std::string("force at z0: ") + e.what();
    return out;
  }
  out.states.push_back(st);
  bool warned = false;
  const long steps = static_cast<long>(std::ceil(s.t_max / s.dt - 1e-9));
  for (long i = 1; i <= steps; ++i) {
    const double a = st.f / mass;
    const double v_half = st.v + 0.5 * s.dt * a;
    const double z = st.z + s.dt * v_half;
    if (z <= z_min) {
      out.halt = HaltReason::z_min;
      break;
    }
    double f;
    try {
      f = force(z);
    } catch (const Error& e) {
      out.halt = HaltReason::force_error;
      out.error = "force at t=" + std::to_string(i * s.dt) + ": " + e.what();
      break;
    }
    st = {i * s.dt, z, v_half + 0.5 * s.dt * f / mass, f};
    out.states.push_back(st);
    if (!warned && std::abs(st.v) > s.speed_warning) {
      warned = true;
      out.warnings.push_back("speed exceeded " + std::to_string(s.speed_warning) +
                             " c; the non-relativistic treatment is no longer reliable");
    }
  }
  return out;
}

/// Trajectory under the selected force components; M is atom 1's total mass.
/// An empty selection means free motion.
inline Trajectory integrate(const PairConfig& pair, const forces::ComponentSelection& sel,
                            const IntegrationSettings& s, const quadrature::QuadratureSpec& spec = {}) {
  pair.validate();
  const double z_min = s.z_min.value_or(1e-2 / pair.omega_min());
  if (!(z_min > 0.0)) throw ConfigError("z_min must be > 0");
  ForceFn force = [](double) { return 0.0; };
  if (!sel.empty()) {
    sel.validate();
    force = [&](double z) { return forces::total_force(pair.at(z), sel, spec).total; };
  }
  return integrate(force, pair.atom1.total_mass, s, z_min);
}

}  // namespace atomforce::dynamics
