#pragma once

#include "atomforce/analysis.hpp"
#include "atomforce/dispersion_forces.hpp"
#include "atomforce/dynamics.hpp"
#include "atomforce/entanglement_forces.hpp"
#include "atomforce/errors.hpp"
#include "atomforce/ladder.hpp"
#include "atomforce/model.hpp"
#include "atomforce/quadrature.hpp"
#include "atomforce/units.hpp"

namespace atomforce {
inline constexpr const char* version = "0.1.0";
}
