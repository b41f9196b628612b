#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "panelopt/bspline.hpp"
#include "panelopt/error.hpp"

using namespace panelopt;

TEST_CASE("basis weights form a partition of unity") {
    for (std::size_t count : {4u, 6u, 8u, 12u}) {
        for (double u : {0.0, 0.013, 0.25, 0.5, 0.77, 0.999, 1.0}) {
            const auto w = basis_weights(count, u);
            CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
            for (double v : w) CHECK(v >= -1e-15);
        }
    }
}

TEST_CASE("surfaces interpolate the pinned endpoints") {
    const std::vector<double> c{0.0, 0.03, 0.06, 0.05, 0.02, 0.0};
    CHECK(surface_ordinate(c, 0.0) == 0.0);
    CHECK(surface_ordinate(c, 1.0) == 0.0);
    // Chord inversion is exact to bisection precision.
    const auto xs = control_abscissae(c.size());
    for (double x : {0.001, 0.1, 0.5, 0.93}) {
        const auto w = basis_weights(c.size(), parameter_at_chord(c.size(), x));
        double back = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) back += w[k] * xs[k];
        CHECK(back == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("from_bspline") {
    SUBCASE("flat genome is degenerate") {
        BsplineGenome flat{std::vector<double>(8, 0.0), std::vector<double>(8, 0.0)};
        try {
            from_bspline(flat, 100);
            FAIL("expected InvalidGeometry");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidGeometry);
        }
    }
    SUBCASE("crossing surfaces are rejected") {
        BsplineGenome g = BsplineGenome::symmetric({0.0, 0.02, 0.05, 0.05, 0.03, 0.01, 0.005, 0.0});
        g.lower_coeffs[4] = 0.08;
        CHECK_THROWS_AS(from_bspline(g, 100), Error);
    }
    SUBCASE("mirror-symmetric genome gives a symmetric airfoil") {
        const auto g = BsplineGenome::symmetric({0.0, 0.02, 0.05, 0.06, 0.04, 0.02, 0.01, 0.0});
        const auto af = from_bspline(g, 200);
        const auto& pts = af.points();
        const std::size_t n = af.panel_count();
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(std::abs(pts[k].x - pts[n - k].x) <= 1e-12);
            CHECK(std::abs(pts[k].y + pts[n - k].y) <= 1e-12);
        }
    }
    SUBCASE("too few coefficients") {
        BsplineGenome g{{0.0, 0.1, 0.0}, {0.0, -0.1, 0.0}};
        CHECK_THROWS_AS(g.validate(), Error);
    }
}

TEST_CASE("least-squares fit reproduces NACA 0012") {
    const auto target = naca4("0012", 200);
    const auto g = fit_genome(target, 8);
    CHECK(g.upper_coeffs.front() == 0.0);
    CHECK(g.upper_coeffs.back() == 0.0);
    const auto af = from_bspline(g, 200);
    double worst = 0.0;
    for (std::size_t i = 0; i < af.points().size(); ++i) {
        worst = std::max(worst, norm(af.points()[i] - target.points()[i]));
    }
    CHECK(worst < 5e-3);
}

TEST_CASE("genome flattening and pinning") {
    BsplineGenome g{{0.1, 0.2, 0.3, 0.4}, {0.5, 0.6, 0.7, 0.8, 0.9}};
    const auto flat = g.flatten();
    CHECK(flat.size() == 9);
    CHECK(BsplineGenome::unflatten(flat, 4) == g);
    CHECK(g.is_pinned(0));
    CHECK(g.is_pinned(3));
    CHECK(g.is_pinned(4));
    CHECK(g.is_pinned(8));
    CHECK_FALSE(g.is_pinned(1));
    CHECK_FALSE(g.is_pinned(5));
    g.pin();
    CHECK(g.upper_coeffs.front() == 0.0);
    CHECK(g.lower_coeffs.back() == 0.0);
}
