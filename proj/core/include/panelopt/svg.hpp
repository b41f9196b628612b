#pragma once

#include <string>

#include "panelopt/geometry.hpp"

namespace panelopt {

/// Static drawing of the contour (nodes joined by panels) and, optionally,
/// the control points.
std::string airfoil_svg(const Airfoil& airfoil, bool show_control_points = true);

}  // namespace panelopt
