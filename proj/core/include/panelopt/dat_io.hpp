#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "panelopt/geometry.hpp"

namespace panelopt {

// Selig-format coordinate files: a name line followed by one "x y" pair per
// line, trailing edge first, running over the upper surface and back along
// the lower one.

/// Parses Selig text. A missing closure point is re-appended; a last point
/// within 1e-6 of the first is snapped onto it. Throws Error(MalformedFile).
Airfoil read_dat(std::string_view text);

/// Writes every point including the closure point, 9 significant digits.
std::string write_dat(const Airfoil& airfoil);

Airfoil read_dat_file(const std::filesystem::path& path);
void write_dat_file(const std::filesystem::path& path, const Airfoil& airfoil);

}  // namespace panelopt
