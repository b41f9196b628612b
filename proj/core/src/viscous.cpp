#include "panelopt/viscous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "panelopt/error.hpp"

namespace panelopt {

void EdgeVelocityDistribution::validate() const {
    PANELOPT_REQUIRE(s.size() == ue.size() && s.size() >= 2, ErrorCode::InvalidArgument,
                     "distribution needs at least two stations with matching arrays");
    PANELOPT_REQUIRE(s[0] == 0.0, ErrorCode::InvalidArgument, "arclength must start at 0");
    for (std::size_t i = 0; i < s.size(); ++i) {
        PANELOPT_REQUIRE(std::isfinite(s[i]) && std::isfinite(ue[i]) && ue[i] >= 0.0, ErrorCode::InvalidArgument,
                         "edge speeds must be finite and non-negative");
        if (i > 0) {
            PANELOPT_REQUIRE(s[i] > s[i - 1], ErrorCode::InvalidArgument, "arclength must increase strictly");
            PANELOPT_REQUIRE(ue[i] > 0.0, ErrorCode::InvalidArgument,
                             "zero edge speed away from the stagnation station");
        }
    }
}

std::pair<EdgeVelocityDistribution, EdgeVelocityDistribution> split_surfaces(const FlowSolution& solution,
                                                                             const Airfoil& airfoil) {
    const auto pans = panels(airfoil);
    const std::size_t n = pans.size();
    const auto& g = solution.gamma;
    PANELOPT_REQUIRE(g.size() == n, ErrorCode::InvalidArgument, "solution does not match airfoil panel count");

    std::vector<double> s_mid(n);
    s_mid[0] = 0.5 * pans[0].len;
    for (std::size_t i = 1; i < n; ++i) s_mid[i] = s_mid[i - 1] + 0.5 * (pans[i - 1].len + pans[i].len);

    // Arclength of the leading edge node; the stagnation point nearest to it wins.
    const std::size_t le = airfoil.leading_edge_index();
    double s_le = 0.0;
    for (std::size_t i = 0; i < le; ++i) s_le += pans[i].len;

    double s_stag = 0.0;
    std::size_t split = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double a = g[j];
        const double b = g[j + 1];
        const bool change = (a <= 0.0 && b > 0.0) || (a >= 0.0 && b < 0.0);
        if (!change) continue;
        const double t = a / (a - b);
        const double s = s_mid[j] + t * (s_mid[j + 1] - s_mid[j]);
        if (std::abs(s - s_le) < best) {
            best = std::abs(s - s_le);
            s_stag = s;
            split = j;
        }
    }
    if (split == n) throw Error(ErrorCode::NoStagnationPoint, "vortex strength never changes sign");

    EdgeVelocityDistribution upper, lower;
    upper.surface = Surface::Upper;
    lower.surface = Surface::Lower;
    for (auto* d : {&upper, &lower}) {
        d->s.push_back(0.0);
        d->ue.push_back(0.0);
    }
    for (std::size_t k = split + 1; k-- > 0;) {
        const double s = s_stag - s_mid[k];
        if (s <= 0.0) continue;
        upper.s.push_back(s);
        upper.ue.push_back(std::abs(g[k]));
    }
    for (std::size_t k = split + 1; k < n; ++k) {
        const double s = s_mid[k] - s_stag;
        if (s <= 0.0) continue;
        lower.s.push_back(s);
        lower.ue.push_back(std::abs(g[k]));
    }
    return {std::move(upper), std::move(lower)};
}

double thwaites_shear(double lambda) noexcept {
    const double l = std::clamp(lambda, -0.1, 0.1);
    if (l >= 0.0) return 0.22 + 1.57 * l - 1.8 * l * l;
    return 0.22 + 1.402 * l + 0.018 * l / (0.107 + l);
}

double thwaites_shape(double lambda) noexcept {
    const double l = std::clamp(lambda, -0.1, 0.1);
    if (l >= 0.0) return 2.61 - 3.75 * l + 5.24 * l * l;
    return 2.088 + 0.0731 / (0.14 + l);
}

BoundaryLayerState thwaites_march(const EdgeVelocityDistribution& dist, double reynolds, double chord, double v_inf) {
    PANELOPT_REQUIRE(std::isfinite(reynolds) && reynolds > 0.0, ErrorCode::InvalidArgument,
                     "Reynolds number must be positive");
    PANELOPT_REQUIRE(chord > 0.0 && v_inf > 0.0, ErrorCode::InvalidArgument, "chord and v_inf must be positive");
    PANELOPT_REQUIRE(std::any_of(dist.ue.begin(), dist.ue.end(), [](double u) { return u > 0.0; }),
                     ErrorCode::DegenerateDistribution, "edge speed is identically zero");
    dist.validate();

    const double nu = chord * v_inf / reynolds;
    const auto& s = dist.s;
    const auto& ue = dist.ue;
    const std::size_t m = s.size();

    std::vector<double> dues(m);
    dues[0] = (ue[1] - ue[0]) / (s[1] - s[0]);
    dues[m - 1] = (ue[m - 1] - ue[m - 2]) / (s[m - 1] - s[m - 2]);
    for (std::size_t i = 1; i + 1 < m; ++i) dues[i] = (ue[i + 1] - ue[i - 1]) / (s[i + 1] - s[i - 1]);

    BoundaryLayerState st;
    st.theta.resize(m);
    st.lambda.resize(m);
    st.shape_factor.resize(m);
    st.cf.resize(m);

    double integral = 0.0;  // int_0^s ue^5 ds, trapezoid
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) integral += 0.5 * (std::pow(ue[i - 1], 5) + std::pow(ue[i], 5)) * (s[i] - s[i - 1]);

        double theta_sq = 0.0;
        if (ue[i] > 0.0) {
            theta_sq = 0.45 * nu * integral / std::pow(ue[i], 6);
        } else if (dues[i] > 0.0) {
            theta_sq = 0.075 * nu / dues[i];  // stagnation point limit
        }
        const double theta = std::sqrt(theta_sq);
        const double lambda = theta_sq * dues[i] / nu;
        const double ell = thwaites_shear(lambda);

        st.theta[i] = theta;
        st.lambda[i] = lambda;
        st.shape_factor[i] = thwaites_shape(lambda);
        st.cf[i] = (ue[i] > 0.0 && theta > 0.0) ? 2.0 * nu * ell / (ue[i] * theta) : 0.0;
        if (!st.separated_at && lambda <= kSeparationLambda) st.separated_at = i;
    }
    return st;
}

DragResult squire_young_drag(const BoundaryLayerState& upper, const BoundaryLayerState& lower,
                             const EdgeVelocityDistribution& upper_dist, const EdgeVelocityDistribution& lower_dist,
                             const FlowCondition& flow, double chord) {
    auto side = [&](const BoundaryLayerState& st, const EdgeVelocityDistribution& d) {
        const std::size_t idx = st.separated_at.value_or(st.theta.size() - 1);
        const double exponent = 0.5 * (st.shape_factor[idx] + 5.0);
        return 2.0 * (st.theta[idx] / chord) * std::pow(d.ue[idx] / flow.v_inf, exponent);
    };
    DragResult r;
    r.cd_upper = side(upper, upper_dist);
    r.cd_lower = side(lower, lower_dist);
    r.cd = r.cd_upper + r.cd_lower;
    r.separated_upper = upper.separated_at.has_value();
    r.separated_lower = lower.separated_at.has_value();
    return r;
}

}  // namespace panelopt
