#include "panelopt/panel_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "panelopt/error.hpp"

namespace panelopt {

void FlowCondition::validate() const {
    PANELOPT_REQUIRE(std::isfinite(v_inf) && v_inf > 0.0, ErrorCode::InvalidArgument, "v_inf must be positive");
    PANELOPT_REQUIRE(std::isfinite(alpha) && std::abs(alpha) < 0.5 * std::numbers::pi, ErrorCode::InvalidArgument,
                     "angle of attack must satisfy |alpha| < pi/2");
}

double freestream_stream_function(Point2 x, const FlowCondition& flow) noexcept {
    return flow.v_inf * (x.y * std::cos(flow.alpha) - x.x * std::sin(flow.alpha));
}

double influence(Point2 x, const Panel& panel) {
    const Point2 d0 = x - panel.a;
    const Point2 d1 = x - panel.b;
    const double r0_sq = norm2(d0);
    const double r1_sq = norm2(d1);
    if (r0_sq <= kEndpointTolerance * kEndpointTolerance || r1_sq <= kEndpointTolerance * kEndpointTolerance) {
        throw Error(ErrorCode::EndpointSingularity, "field point coincides with a panel endpoint");
    }
    const double p0 = dot(d0, panel.h);
    const double p1 = dot(d1, panel.h);
    const double i_perp = dot(panel.h_perp, d0);

    // bracket / |h| is the integral of log|x - s| along the panel.
    const double bracket = 0.5 * p0 * std::log(r0_sq) - 0.5 * p1 * std::log(r1_sq) -
                           i_perp * std::atan2(i_perp, p0) + i_perp * std::atan2(i_perp, p1) -
                           panel.len * panel.len;
    return -bracket / (2.0 * std::numbers::pi * panel.len);
}

PanelSystem assemble(const Airfoil& airfoil, const FlowCondition& flow) {
    return assemble(panels(airfoil), flow);
}

PanelSystem assemble(const std::vector<Panel>& pans, const FlowCondition& flow) {
    flow.validate();
    const std::size_t n = pans.size();
    PANELOPT_REQUIRE(n >= 4, ErrorCode::InvalidGeometry, "need at least 4 panels");

    PanelSystem sys;
    sys.n = n;
    sys.a = DenseMatrix(n, n);
    sys.b.resize(n);

    for (std::size_t j = 0; j < n; ++j) {
        const Point2 ctrl = pans[j].mid;
        auto row = sys.a.row(j);
        // Raw coefficient of gamma_i in  -sum_i F_i(ctrl) + C = psi_inf(ctrl).
        for (std::size_t i = 0; i + 1 < n; ++i) row[i] = -influence(ctrl, pans[i]);
        const double last = -influence(ctrl, pans[n - 1]);
        row[0] -= last;  // gamma_{n-1} = -gamma_0
        row[n - 1] = 1.0;
        sys.b[j] = freestream_stream_function(ctrl, flow);
    }
    return sys;
}

FlowSolution lu_solve(PanelSystem system) {
    const std::size_t n = system.n;
    lu_solve_in_place(system.a, system.b);
    FlowSolution sol;
    sol.gamma.assign(system.b.begin(), system.b.end());
    sol.stream_constant = system.b[n - 1];
    sol.gamma[n - 1] = -sol.gamma[0];
    return sol;
}

SurfaceQuantities surface_quantities(const FlowSolution& solution, const Airfoil& airfoil,
                                     const FlowCondition& flow) {
    const auto pans = panels(airfoil);
    const std::size_t n = pans.size();
    PANELOPT_REQUIRE(solution.gamma.size() == n, ErrorCode::InvalidArgument,
                     "solution does not match airfoil panel count");

    SurfaceQuantities q;
    q.tangential_speed.resize(n);
    q.cp.resize(n);
    double ccw_circulation = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = solution.gamma[i];
        q.tangential_speed[i] = g;
        const double ratio = g / flow.v_inf;
        q.cp[i] = 1.0 - ratio * ratio;
        ccw_circulation += g * pans[i].len;
    }
    // gamma is counter-clockwise positive; lift follows the clockwise circulation.
    q.circulation = -ccw_circulation;
    q.cl = 2.0 * q.circulation / (flow.v_inf * airfoil.chord());
    return q;
}

}  // namespace panelopt
