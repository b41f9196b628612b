#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "panelopt/geometry.hpp"
#include "panelopt/panel_core.hpp"

namespace panelopt {

enum class Surface { Upper, Lower };

/// Edge speed along one surface, measured from the stagnation point.
struct EdgeVelocityDistribution {
    std::vector<double> s;   // arclength, s[0] == 0, strictly increasing
    std::vector<double> ue;  // >= 0, zero allowed only at station 0
    Surface surface = Surface::Upper;

    void validate() const;
    friend bool operator==(const EdgeVelocityDistribution&, const EdgeVelocityDistribution&) = default;
};

/// Splits the contour at the interpolated sign change of gamma. Upper is the
/// branch running back towards index 0. Throws Error(NoStagnationPoint).
std::pair<EdgeVelocityDistribution, EdgeVelocityDistribution> split_surfaces(const FlowSolution& solution,
                                                                             const Airfoil& airfoil);

// Thwaites correlations (Cebeci-Bradshaw fits), lambda clamped to [-0.1, 0.1].
double thwaites_shear(double lambda) noexcept;  // l(lambda)
double thwaites_shape(double lambda) noexcept;  // H(lambda)

inline constexpr double kSeparationLambda = -0.09;

struct BoundaryLayerState {
    std::vector<double> theta;
    std::vector<double> lambda;
    std::vector<double> shape_factor;
    std::vector<double> cf;
    std::optional<std::size_t> separated_at;

    friend bool operator==(const BoundaryLayerState&, const BoundaryLayerState&) = default;
};

/// Thwaites' integral method with nu = chord * v_inf / Re. Values are filled
/// for every station; stations past separated_at carry no physical meaning.
BoundaryLayerState thwaites_march(const EdgeVelocityDistribution& dist, double reynolds, double chord = 1.0,
                                  double v_inf = 1.0);

struct DragResult {
    double cd = 0.0;
    double cd_upper = 0.0;
    double cd_lower = 0.0;
    bool separated_upper = false;
    bool separated_lower = false;

    [[nodiscard]] bool separated() const noexcept { return separated_upper || separated_lower; }
    friend bool operator==(const DragResult&, const DragResult&) = default;
};

/// Squire-Young trailing edge extrapolation; a separated surface is frozen at
/// its separation station.
DragResult squire_young_drag(const BoundaryLayerState& upper, const BoundaryLayerState& lower,
                             const EdgeVelocityDistribution& upper_dist, const EdgeVelocityDistribution& lower_dist,
                             const FlowCondition& flow, double chord);

}  // namespace panelopt
