#pragma once

#include <cstddef>
#include <vector>

#include "panelopt/geometry.hpp"
#include "panelopt/linear_solve.hpp"

namespace panelopt {

struct FlowCondition {
    double v_inf = 1.0;
    double alpha = 0.0;  // radians

    /// Throws InvalidArgument unless v_inf > 0 and |alpha| < pi/2.
    void validate() const;
};

/// Stream function of the uniform onset flow, v (y cos a - x sin a).
double freestream_stream_function(Point2 x, const FlowCondition& flow) noexcept;

/// Collocation system with the Kutta condition folded into column 0.
/// Unknowns: [gamma_0, ..., gamma_{n-2}, C].
struct PanelSystem {
    std::size_t n = 0;
    DenseMatrix a;
    std::vector<double> b;
};

struct FlowSolution {
    std::vector<double> gamma;  // n entries, gamma[n-1] == -gamma[0]
    double stream_constant = 0.0;

    friend bool operator==(const FlowSolution&, const FlowSolution&) = default;
};

// Field points closer than this to a panel endpoint are rejected.
inline constexpr double kEndpointTolerance = 1e-14;

/// Integral of the fundamental solution -log|x - s| / (2 pi) over the panel,
/// per unit vortex strength. Closed form: two logarithms, two atan2.
/// Throws Error(EndpointSingularity) at a panel endpoint.
double influence(Point2 x, const Panel& panel);

PanelSystem assemble(const Airfoil& airfoil, const FlowCondition& flow);
PanelSystem assemble(const std::vector<Panel>& panels, const FlowCondition& flow);

/// Factorises in place (partial pivoting) and reconstructs gamma_{n-1}.
FlowSolution lu_solve(PanelSystem system);

struct SurfaceQuantities {
    std::vector<double> tangential_speed;  // v_t per panel
    std::vector<double> cp;
    double cl = 0.0;
    double circulation = 0.0;  // clockwise, sum of -gamma_i len_i

    friend bool operator==(const SurfaceQuantities&, const SurfaceQuantities&) = default;
};

SurfaceQuantities surface_quantities(const FlowSolution& solution, const Airfoil& airfoil,
                                     const FlowCondition& flow);

}  // namespace panelopt
