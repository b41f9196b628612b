#pragma once

#include <iosfwd>
#include <string_view>

#include "panelopt/analysis.hpp"

namespace panelopt {

inline constexpr const char* kCpCsvHeader = "index,x_mid,y_mid,gamma,cp";
inline constexpr const char* kBoundaryLayerCsvHeader = "s,Ue,theta,lambda,H,cf";
inline constexpr const char* kSummaryCsvHeader =
    "name,alpha_deg,reynolds,panels,cl,cd,cd_upper,cd_lower,separated_upper,separated_lower";

void write_cp_csv(std::ostream& out, const Airfoil& airfoil, const Analysis& analysis);
void write_boundary_layer_csv(std::ostream& out, const EdgeVelocityDistribution& edge,
                              const BoundaryLayerState& state);
void write_summary_csv(std::ostream& out, const Airfoil& airfoil, const FlowCondition& flow, double reynolds,
                       const Analysis& analysis);

}  // namespace panelopt
