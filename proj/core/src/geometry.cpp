#include "panelopt/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "panelopt/error.hpp"

namespace panelopt {

double signed_area(const std::vector<Point2>& pts) noexcept {
    double twice = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        twice += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
    }
    return 0.5 * twice;
}

Airfoil::Airfoil(std::string name, std::vector<Point2> points)
    : name_(std::move(name)), points_(std::move(points)) {
    PANELOPT_REQUIRE(points_.size() >= 5, ErrorCode::InvalidGeometry,
                     "airfoil needs at least 4 panels, got " + std::to_string(points_.size()) + " points");
    for (const auto& p : points_) {
        PANELOPT_REQUIRE(std::isfinite(p.x) && std::isfinite(p.y), ErrorCode::InvalidGeometry,
                         "non-finite coordinate");
    }
    PANELOPT_REQUIRE(points_.front() == points_.back(), ErrorCode::InvalidGeometry,
                     "contour is not closed (last point must equal the trailing edge)");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        PANELOPT_REQUIRE(!(points_[i] == points_[i + 1]), ErrorCode::InvalidGeometry,
                         "zero-length panel at index " + std::to_string(i));
    }
    const double te_x = points_.front().x;
    PANELOPT_REQUIRE(std::all_of(points_.begin(), points_.end(), [te_x](Point2 p) { return p.x <= te_x; }),
                     ErrorCode::InvalidGeometry, "point 0 must be the trailing edge (maximum x)");
    PANELOPT_REQUIRE(panelopt::signed_area(points_) > 0.0, ErrorCode::InvalidGeometry,
                     "contour must run trailing edge -> upper -> leading edge -> lower");
}

double Airfoil::chord() const noexcept {
    const auto [lo, hi] = std::minmax_element(points_.begin(), points_.end(),
                                              [](Point2 a, Point2 b) { return a.x < b.x; });
    return hi->x - lo->x;
}

double Airfoil::signed_area() const noexcept { return panelopt::signed_area(points_); }

std::size_t Airfoil::leading_edge_index() const noexcept {
    const auto it = std::min_element(points_.begin(), points_.end(),
                                     [](Point2 a, Point2 b) { return a.x < b.x; });
    return static_cast<std::size_t>(it - points_.begin());
}

Panel make_panel(Point2 a, Point2 b) noexcept {
    Panel p;
    p.a = a;
    p.b = b;
    p.h = b - a;
    p.h_perp = rotate_cw(p.h);
    p.mid = 0.5 * (a + b);
    p.len = norm(p.h);
    return p;
}

std::vector<Panel> panels(const Airfoil& airfoil) {
    const auto& pts = airfoil.points();
    std::vector<Panel> out;
    out.reserve(airfoil.panel_count());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.push_back(make_panel(pts[i], pts[i + 1]));
    return out;
}

std::vector<double> chord_stations(std::size_t count, Spacing spacing) {
    PANELOPT_REQUIRE(count >= 2, ErrorCode::InvalidArgument, "need at least two stations");
    std::vector<double> xs(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = static_cast<double>(k) / last;
        xs[k] = spacing == Spacing::Cosine ? 0.5 * (1.0 - std::cos(std::numbers::pi * u)) : u;
    }
    xs.front() = 0.0;
    xs.back() = 1.0;
    return xs;
}

Naca4Params Naca4Params::parse(std::string_view digits) {
    PANELOPT_REQUIRE(digits.size() == 4 && std::all_of(digits.begin(), digits.end(),
                                                       [](char c) { return c >= '0' && c <= '9'; }),
                     ErrorCode::InvalidArgument, "NACA code must be four digits, got '" + std::string(digits) + "'");
    Naca4Params p;
    p.max_camber = (digits[0] - '0') / 100.0;
    p.camber_position = (digits[1] - '0') / 10.0;
    p.thickness = ((digits[2] - '0') * 10 + (digits[3] - '0')) / 100.0;
    PANELOPT_REQUIRE(p.thickness > 0.0, ErrorCode::InvalidArgument, "NACA thickness digits must be nonzero");
    PANELOPT_REQUIRE(p.max_camber == 0.0 || p.camber_position > 0.0, ErrorCode::InvalidArgument,
                     "cambered NACA section needs a nonzero camber position digit");
    return p;
}

double Naca4Params::camber(double x) const noexcept {
    const double m = max_camber;
    const double p = camber_position;
    if (m == 0.0) return 0.0;
    if (x < p) return m / (p * p) * (2.0 * p * x - x * x);
    return m / ((1.0 - p) * (1.0 - p)) * ((1.0 - 2.0 * p) + 2.0 * p * x - x * x);
}

double Naca4Params::camber_slope(double x) const noexcept {
    const double m = max_camber;
    const double p = camber_position;
    if (m == 0.0) return 0.0;
    if (x < p) return 2.0 * m / (p * p) * (p - x);
    return 2.0 * m / ((1.0 - p) * (1.0 - p)) * (p - x);
}

double Naca4Params::half_thickness(double x) const noexcept {
    return 5.0 * thickness *
           (0.2969 * std::sqrt(x) + x * (-0.1260 + x * (-0.3516 + x * (0.2843 + x * -0.1036))));
}

Airfoil naca4(std::string_view digits, std::size_t n, Spacing spacing) {
    return naca4(Naca4Params::parse(digits), n, spacing, "NACA " + std::string(digits));
}

Airfoil naca4(const Naca4Params& params, std::size_t n, Spacing spacing, std::string name) {
    PANELOPT_REQUIRE(n >= 8 && n % 2 == 0, ErrorCode::InvalidArgument,
                     "panel count must be even and >= 8, got " + std::to_string(n));
    PANELOPT_REQUIRE(params.thickness > 0.0 && params.max_camber >= 0.0 &&
                         (params.max_camber == 0.0 || (params.camber_position > 0.0 && params.camber_position < 1.0)),
                     ErrorCode::InvalidArgument, "invalid NACA parameters");
    const std::size_t half = n / 2;
    const auto xs = chord_stations(half + 1, spacing);

    auto surface_point = [&](double x, double side) -> Point2 {
        if (x == 0.0) return {0.0, 0.0};
        if (x == 1.0) return {1.0, 0.0};
        const double yt = params.half_thickness(x);
        const double yc = params.camber(x);
        const double theta = std::atan(params.camber_slope(x));
        return {x - side * yt * std::sin(theta), yc + side * yt * std::cos(theta)};
    };

    std::vector<Point2> pts(n + 1);
    for (std::size_t k = 0; k <= half; ++k) pts[half - k] = surface_point(xs[k], 1.0);
    for (std::size_t k = 1; k <= half; ++k) pts[half + k] = surface_point(xs[k], -1.0);
    return Airfoil(std::move(name), std::move(pts));
}

}  // namespace panelopt
