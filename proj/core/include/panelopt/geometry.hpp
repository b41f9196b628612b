#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace panelopt {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2 a, Point2 b) noexcept = default;
};

constexpr double dot(Point2 a, Point2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double norm2(Point2 a) noexcept { return dot(a, a); }
inline double norm(Point2 a) noexcept { return std::hypot(a.x, a.y); }

// Rotation by -90 degrees. For the trailing edge -> upper -> leading edge ->
// lower traversal this points out of the body.
constexpr Point2 rotate_cw(Point2 a) noexcept { return {a.y, -a.x}; }

/// Closed airfoil contour.
///
/// points[0] is the trailing edge and points.back() == points[0]. The contour
/// runs over the upper surface to the leading edge and back along the lower
/// surface (Selig order), which makes the signed area positive. The
/// constructor enforces all of this and throws Error(InvalidGeometry).
class Airfoil {
public:
    Airfoil(std::string name, std::vector<Point2> points);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<Point2>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t panel_count() const noexcept { return points_.size() - 1; }

    [[nodiscard]] double chord() const noexcept;
    [[nodiscard]] double signed_area() const noexcept;
    /// Index of the point with minimum x (the leading edge node).
    [[nodiscard]] std::size_t leading_edge_index() const noexcept;

private:
    std::string name_;
    std::vector<Point2> points_;
};

double signed_area(const std::vector<Point2>& closed_polyline) noexcept;

struct Panel {
    Point2 a;       // start node x_i
    Point2 b;       // end node x_{i+1}
    Point2 h;       // b - a
    Point2 h_perp;  // outward normal, |h_perp| == |h|
    Point2 mid;     // control point
    double len = 0.0;
};

Panel make_panel(Point2 a, Point2 b) noexcept;
std::vector<Panel> panels(const Airfoil& airfoil);

enum class Spacing { Cosine, Uniform };

/// Station abscissae in [0, 1], ascending, count stations (>= 2).
std::vector<double> chord_stations(std::size_t count, Spacing spacing);

struct Naca4Params {
    double max_camber = 0.0;       // m, fraction of chord
    double camber_position = 0.0;  // p, fraction of chord
    double thickness = 0.12;       // t, fraction of chord

    /// Parses a four digit code such as "2412". Throws InvalidArgument.
    static Naca4Params parse(std::string_view digits);

    [[nodiscard]] double camber(double x) const noexcept;
    [[nodiscard]] double camber_slope(double x) const noexcept;
    /// Half thickness with the closed trailing edge coefficient (-0.1036).
    [[nodiscard]] double half_thickness(double x) const noexcept;
};

/// NACA 4-digit section with n panels (n even, n >= 8).
Airfoil naca4(std::string_view digits, std::size_t n, Spacing spacing = Spacing::Cosine);
Airfoil naca4(const Naca4Params& params, std::size_t n, Spacing spacing, std::string name);

}  // namespace panelopt
