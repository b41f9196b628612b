#pragma once

// Reference computations used only by the tests. None of these call into the
// closed-form kernels they are checking.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "panelopt/geometry.hpp"
#include "panelopt/linear_solve.hpp"

namespace panelopt::oracle {

/// -(1/2pi) * integral over the segment a->b of log|x - s| ds by tanh-sinh
/// quadrature. The segment is parametrised by signed distance u from the foot
/// of the perpendicular and split there, so the integrand's only rough point
/// sits on an interval end where the quadrature offers the exact complement.
inline double panel_integral(Point2 x, Point2 a, Point2 b) {
    const double hx = b.x - a.x;
    const double hy = b.y - a.y;
    const double len = std::hypot(hx, hy);
    const double along = ((x.x - a.x) * hx + (x.y - a.y) * hy) / len;
    const double d = std::abs((x.y - a.y) * hx - (x.x - a.x) * hy) / len;
    const double lo = -along;       // u at a
    const double hi = len - along;  // u at b

    boost::math::quadrature::tanh_sinh<double> integrator;
    // Interval [0, top]: near 0 the complement -xc equals u to full precision.
    auto right = [&](double top) {
        if (top <= 0.0) return 0.0;
        return integrator.integrate(
            [&](double u, double xc) {
                const double v = u < 0.5 * top ? -xc : u;
                return std::log(std::hypot(v, d));
            },
            0.0, top);
    };
    double total = 0.0;
    if (lo < 0.0 && hi > 0.0) {
        total = right(hi) + right(-lo);  // mirror the left part onto [0, -lo]
    } else {
        total = integrator.integrate([&](double u) { return std::log(std::hypot(u, d)); }, lo, hi);
    }
    return -total / (2.0 * std::numbers::pi);
}

/// Bordered (n+1)x(n+1) system: unknowns gamma_0..gamma_{n-1}, C; rows 0..n-1
/// are collocation equations, row n is gamma_0 + gamma_{n-1} = 0.
struct BorderedSystem {
    DenseMatrix a;
    std::vector<double> b;
    DenseMatrix raw;  // n x n raw coefficients of gamma_i
};

inline BorderedSystem bordered_system(const Airfoil& airfoil, double v_inf, double alpha) {
    const auto& pts = airfoil.points();
    const std::size_t n = airfoil.panel_count();
    BorderedSystem sys{DenseMatrix(n + 1, n + 1), std::vector<double>(n + 1, 0.0), DenseMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        const Point2 ctrl{0.5 * (pts[j].x + pts[j + 1].x), 0.5 * (pts[j].y + pts[j + 1].y)};
        for (std::size_t i = 0; i < n; ++i) {
            const double coeff = -panel_integral(ctrl, pts[i], pts[i + 1]);
            sys.raw(j, i) = coeff;
            sys.a(j, i) = coeff;
        }
        sys.a(j, n) = 1.0;
        sys.b[j] = v_inf * (ctrl.y * std::cos(alpha) - ctrl.x * std::sin(alpha));
    }
    sys.a(n, 0) = 1.0;
    sys.a(n, n - 1) = 1.0;
    return sys;
}

}  // namespace panelopt::oracle
