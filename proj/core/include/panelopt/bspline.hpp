#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "panelopt/geometry.hpp"

namespace panelopt {

inline constexpr int kBsplineDegree = 3;

/// Per-surface control ordinates of two clamped cubic B-spline curves.
///
/// Control point k of a surface sits at (control_abscissae(m)[k], coeff[k]).
/// The first two abscissae are both 0, which gives the curve a vertical
/// tangent at the leading edge (round nose). Coefficients 0 and m-1 are pinned
/// to zero so each surface starts at (0,0) and ends at (1,0).
struct BsplineGenome {
    std::vector<double> upper_coeffs;
    std::vector<double> lower_coeffs;
    int degree = kBsplineDegree;

    [[nodiscard]] std::size_t size() const noexcept { return upper_coeffs.size() + lower_coeffs.size(); }

    /// Throws InvalidArgument when counts or degree are unusable.
    void validate() const;
    /// Re-imposes the endpoint pins.
    void pin() noexcept;
    [[nodiscard]] bool is_pinned(std::size_t flat_index) const noexcept;

    /// Concatenated view: upper then lower.
    [[nodiscard]] std::vector<double> flatten() const;
    static BsplineGenome unflatten(std::span<const double> flat, std::size_t upper_count);

    /// lower = -upper.
    static BsplineGenome symmetric(std::vector<double> upper);

    friend bool operator==(const BsplineGenome&, const BsplineGenome&) = default;
};

std::vector<double> control_abscissae(std::size_t count);

/// Curve parameter u in [0,1] at which the surface reaches chord position x.
double parameter_at_chord(std::size_t count, double x);

/// Basis weights N_k(u) for `count` control points (clamped, uniform interior knots).
std::vector<double> basis_weights(std::size_t count, double u);

/// Surface ordinate at chord position x.
double surface_ordinate(std::span<const double> coeffs, double x);

/// Samples the genome at cosine-spaced chord stations into an n-panel airfoil.
/// Throws InvalidGeometry if the upper surface is not strictly above the lower
/// one at every interior station.
Airfoil from_bspline(const BsplineGenome& genome, std::size_t n, std::string name = "bspline");

/// Least-squares fit of a genome with `count` coefficients per surface to a
/// chord-normalised airfoil.
BsplineGenome fit_genome(const Airfoil& airfoil, std::size_t count);

}  // namespace panelopt
