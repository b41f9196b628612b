#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/oracles.hpp"
#include "panelopt/error.hpp"
#include "panelopt/panel_core.hpp"

using namespace panelopt;

TEST_CASE("closed form matches quadrature at random field points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double len = 0.005 + 0.045 * unit(rng);
        const double ang = 2.0 * std::numbers::pi * unit(rng);
        const Point2 a{unit(rng), unit(rng) - 0.5};
        const Point2 b = a + len * Point2{std::cos(ang), std::sin(ang)};
        const auto pan = make_panel(a, b);

        const double dist = len * (0.1 + 19.9 * unit(rng));
        const double dir = 2.0 * std::numbers::pi * unit(rng);
        const Point2 x = pan.mid + dist * Point2{std::cos(dir), std::sin(dir)};
        if (std::min(norm(x - a), norm(x - b)) < 0.1 * len) continue;

        const double expected = oracle::panel_integral(x, a, b);
        const double got = influence(x, pan);
        worst = std::max(worst, std::abs(got - expected) / std::max(std::abs(expected), 1e-300));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("unit panel reference point") {
    const auto pan = make_panel({0.0, 0.0}, {1.0, 0.0});
    const Point2 x{0.5, 0.5};
    CHECK(influence(x, pan) == doctest::Approx(oracle::panel_integral(x, pan.a, pan.b)).epsilon(1e-10));
}

TEST_CASE("self term at the panel midpoint") {
    for (double len : {0.001, 0.01, 0.3, 2.0}) {
        const auto pan = make_panel({0.2, 0.1}, Point2{0.2, 0.1} + len * Point2{0.6, 0.8});
        const double expected = oracle::panel_integral(pan.mid, pan.a, pan.b);
        // -(len/2pi) (log(len/2) - 1) exactly.
        const double closed = -len * (std::log(0.5 * len) - 1.0) / (2.0 * std::numbers::pi);
        CHECK(influence(pan.mid, pan) == doctest::Approx(expected).epsilon(1e-8));
        CHECK(influence(pan.mid, pan) == doctest::Approx(closed).epsilon(1e-13));
    }
}

TEST_CASE("far field behaves like a point vortex") {
    const auto pan = make_panel({0.0, 0.0}, {0.02, 0.0});
    const double r = 1e3 * pan.len;
    for (double dir : {0.3, 1.2, 2.9, 4.4}) {
        const Point2 x = pan.mid + r * Point2{std::cos(dir), std::sin(dir)};
        const double point = -pan.len * std::log(r) / (2.0 * std::numbers::pi);
        CHECK(std::abs(influence(x, pan) - point) <= 1e-4 * std::abs(point));
    }
}

TEST_CASE("mirror symmetry about the panel line") {
    const auto pan = make_panel({0.0, 0.0}, {1.0, 0.0});
    for (double d : {0.01, 0.2, 3.0}) {
        CHECK(influence({0.5, d}, pan) == doctest::Approx(influence({0.5, -d}, pan)).epsilon(1e-15));
        CHECK(influence({0.3, d}, pan) == doctest::Approx(influence({0.7, d}, pan)).epsilon(1e-14));
    }
}

TEST_CASE("endpoints are rejected") {
    const auto pan = make_panel({0.1, 0.2}, {0.3, 0.25});
    for (Point2 x : {pan.a, pan.b, pan.b + Point2{1e-16, 0.0}}) {
        try {
            (void)influence(x, pan);
            FAIL("expected EndpointSingularity");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EndpointSingularity);
        }
    }
    CHECK(std::isfinite(influence(pan.a + Point2{1e-10, 0.0}, pan)));
}
