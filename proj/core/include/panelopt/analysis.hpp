#pragma once

#include "panelopt/geometry.hpp"
#include "panelopt/panel_core.hpp"
#include "panelopt/viscous.hpp"

namespace panelopt {

struct ViscousResult {
    EdgeVelocityDistribution upper_edge;
    EdgeVelocityDistribution lower_edge;
    BoundaryLayerState upper;
    BoundaryLayerState lower;
    DragResult drag;

    friend bool operator==(const ViscousResult&, const ViscousResult&) = default;
};

/// Everything derived from one solved airfoil problem.
struct Analysis {
    FlowSolution solution;
    SurfaceQuantities surface;
    ViscousResult viscous;

    [[nodiscard]] double cl() const noexcept { return surface.cl; }
    [[nodiscard]] double cd() const noexcept { return viscous.drag.cd; }

    friend bool operator==(const Analysis&, const Analysis&) = default;
};

ViscousResult viscous_correction(const FlowSolution& solution, const Airfoil& airfoil, const FlowCondition& flow,
                                 double reynolds);

/// Surface quantities and the boundary layer for an already solved system.
Analysis post_process(FlowSolution solution, const Airfoil& airfoil, const FlowCondition& flow, double reynolds);

/// assemble -> lu_solve -> post_process.
Analysis analyze(const Airfoil& airfoil, const FlowCondition& flow, double reynolds);

}  // namespace panelopt
