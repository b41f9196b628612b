#include "panelopt/csv_export.hpp"

#include <cstdio>
#include <numbers>
#include <ostream>

namespace panelopt {

void write_cp_csv(std::ostream& out, const Airfoil& airfoil, const Analysis& analysis) {
    out << kCpCsvHeader << '\n';
    const auto pans = panels(airfoil);
    char buf[256];
    for (std::size_t i = 0; i < pans.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g,%.10g,%.10g\n", i, pans[i].mid.x, pans[i].mid.y,
                      analysis.solution.gamma[i], analysis.surface.cp[i]);
        out << buf;
    }
}

void write_boundary_layer_csv(std::ostream& out, const EdgeVelocityDistribution& edge,
                              const BoundaryLayerState& state) {
    out << kBoundaryLayerCsvHeader << '\n';
    char buf[256];
    for (std::size_t i = 0; i < edge.s.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", edge.s[i], edge.ue[i], state.theta[i],
                      state.lambda[i], state.shape_factor[i], state.cf[i]);
        out << buf;
    }
}

void write_summary_csv(std::ostream& out, const Airfoil& airfoil, const FlowCondition& flow, double reynolds,
                       const Analysis& analysis) {
    out << kSummaryCsvHeader << '\n';
    const auto& d = analysis.viscous.drag;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%zu,%.10g,%.10g,%.10g,%.10g,%d,%d\n", airfoil.name().c_str(),
                  flow.alpha * 180.0 / std::numbers::pi, reynolds, airfoil.panel_count(), analysis.cl(), d.cd,
                  d.cd_upper, d.cd_lower, d.separated_upper ? 1 : 0, d.separated_lower ? 1 : 0);
    out << buf;
}

}  // namespace panelopt
