#include "panelopt/analysis.hpp"

namespace panelopt {

ViscousResult viscous_correction(const FlowSolution& solution, const Airfoil& airfoil, const FlowCondition& flow,
                                 double reynolds) {
    ViscousResult v;
    auto [upper, lower] = split_surfaces(solution, airfoil);
    const double chord = airfoil.chord();
    v.upper = thwaites_march(upper, reynolds, chord, flow.v_inf);
    v.lower = thwaites_march(lower, reynolds, chord, flow.v_inf);
    v.drag = squire_young_drag(v.upper, v.lower, upper, lower, flow, chord);
    v.upper_edge = std::move(upper);
    v.lower_edge = std::move(lower);
    return v;
}

Analysis post_process(FlowSolution solution, const Airfoil& airfoil, const FlowCondition& flow, double reynolds) {
    Analysis a;
    a.surface = surface_quantities(solution, airfoil, flow);
    a.viscous = viscous_correction(solution, airfoil, flow, reynolds);
    a.solution = std::move(solution);
    return a;
}

Analysis analyze(const Airfoil& airfoil, const FlowCondition& flow, double reynolds) {
    return post_process(lu_solve(assemble(airfoil, flow)), airfoil, flow, reynolds);
}

}  // namespace panelopt
