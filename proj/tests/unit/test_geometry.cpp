#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "panelopt/error.hpp"
#include "panelopt/geometry.hpp"

using namespace panelopt;

namespace {

Airfoil unit_square() {
    return Airfoil("square", {{1, 0}, {1, 1}, {0, 1}, {0, 0}, {1, 0}});
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Ok;
}

}  // namespace

TEST_CASE("airfoil invariants are enforced") {
    CHECK(code_of([] { Airfoil("open", {{1, 0}, {0.5, 0.1}, {0, 0}, {0.5, -0.1}, {0.9, 0}}); }) ==
          ErrorCode::InvalidGeometry);
    CHECK(code_of([] { Airfoil("tiny", {{1, 0}, {0, 1}, {0, 0}, {1, 0}}); }) == ErrorCode::InvalidGeometry);
    // Lower surface first: wrong orientation.
    CHECK(code_of([] { Airfoil("cw", {{1, 0}, {0, 0}, {0, 1}, {1, 1}, {1, 0}}); }) == ErrorCode::InvalidGeometry);
    // Trailing edge not at maximum x.
    CHECK(code_of([] { Airfoil("te", {{0.5, 0}, {1, 1}, {0, 1}, {0, 0}, {0.5, 0}}); }) ==
          ErrorCode::InvalidGeometry);
    CHECK(code_of([] { Airfoil("dup", {{1, 0}, {1, 1}, {1, 1}, {0, 1}, {0, 0}, {1, 0}}); }) ==
          ErrorCode::InvalidGeometry);
    CHECK(unit_square().signed_area() == doctest::Approx(1.0));
}

TEST_CASE("panels of the unit square") {
    const auto ps = panels(unit_square());
    REQUIRE(ps.size() == 4);
    const Point2 mids[] = {{1, 0.5}, {0.5, 1}, {0, 0.5}, {0.5, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(ps[i].len == 1.0);
        CHECK(ps[i].mid == mids[i]);
        // Outward: away from the centre (0.5, 0.5).
        CHECK(dot(ps[i].h_perp, ps[i].mid - Point2{0.5, 0.5}) > 0.0);
        CHECK(dot(ps[i].h, ps[i].h_perp) == 0.0);
    }
}

TEST_CASE("naca4 generator") {
    SUBCASE("errors") {
        CHECK(code_of([] { naca4("24x2", 100); }) == ErrorCode::InvalidArgument);
        CHECK(code_of([] { naca4("241", 100); }) == ErrorCode::InvalidArgument);
        CHECK(code_of([] { naca4("2412", 6); }) == ErrorCode::InvalidArgument);
        CHECK(code_of([] { naca4("2412", 101); }) == ErrorCode::InvalidArgument);
    }
    SUBCASE("thickness vanishes at the leading edge and trailing edge") {
        const auto p = Naca4Params::parse("0012");
        CHECK(p.half_thickness(0.0) == 0.0);
        CHECK(std::abs(p.half_thickness(1.0)) < 1e-15);
    }
    SUBCASE("zero camber is mirror symmetric") {
        const auto af = naca4("0012", 200);
        const auto& pts = af.points();
        const std::size_t n = af.panel_count();
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(std::abs(pts[k].x - pts[n - k].x) <= 1e-12);
            CHECK(std::abs(pts[k].y + pts[n - k].y) <= 1e-12);
        }
    }
    SUBCASE("2412 camber line peaks at 0.02 near x = 0.4") {
        const auto p = Naca4Params::parse("2412");
        double best = -1.0, where = -1.0;
        for (int i = 0; i <= 100000; ++i) {
            const double x = i / 100000.0;
            if (p.camber(x) > best) {
                best = p.camber(x);
                where = x;
            }
        }
        CHECK(best == doctest::Approx(0.02).epsilon(1e-9));
        CHECK(where == doctest::Approx(0.4).epsilon(1e-4));
    }
    SUBCASE("generated airfoils satisfy the contour invariants") {
        for (const char* code : {"0012", "2412", "4415", "0006"}) {
            for (auto spacing : {Spacing::Cosine, Spacing::Uniform}) {
                const auto af = naca4(code, 120, spacing);
                CHECK(af.points().front() == af.points().back());
                CHECK(af.signed_area() > 0.0);
                CHECK(af.panel_count() == 120);
                // Camber tilts the nose slightly forward of x = 0.
                CHECK(af.chord() == doctest::Approx(1.0).epsilon(1e-3));
                for (const auto& pan : panels(af)) CHECK(pan.len > 0.0);
            }
        }
    }
}

TEST_CASE("panel loop closes and normals point outward on the upper surface") {
    const auto af = naca4("2412", 200);
    const auto ps = panels(af);
    Point2 sum{0, 0};
    for (const auto& p : ps) {
        sum = sum + p.h;
        CHECK(std::abs(norm(p.h_perp) - norm(p.h)) <= 1e-12 * norm(p.h));
    }
    CHECK(std::abs(sum.x) <= 1e-13 * 200);
    CHECK(std::abs(sum.y) <= 1e-13 * 200);

    // Upper surface: panels 0 .. n/2-1. Right at the nose the normal turns forward.
    for (std::size_t i = 0; i < ps.size() / 2; ++i) {
        if (ps[i].mid.x > 0.02) CHECK(ps[i].h_perp.y > 0.0);
    }
    for (std::size_t i = ps.size() / 2; i < ps.size(); ++i) {
        if (ps[i].mid.x > 0.02) CHECK(ps[i].h_perp.y < 0.0);
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        CHECK(ps[i].mid == 0.5 * (af.points()[i] + af.points()[i + 1]));
    }
}

TEST_CASE("convex shape normals point away from the centroid") {
    // Regular 16-gon starting at its maximum-x vertex, counter-clockwise.
    std::vector<Point2> pts;
    for (int k = 0; k <= 16; ++k) {
        const double t = 2.0 * 3.141592653589793 * (k % 16) / 16.0;
        pts.push_back({std::cos(t), std::sin(t)});
    }
    const Airfoil poly("16-gon", pts);
    for (const auto& p : panels(poly)) CHECK(dot(p.h_perp, p.mid) > 0.0);
}
