#include "panelopt/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "panelopt/error.hpp"
#include "panelopt/linear_solve.hpp"

namespace panelopt {

namespace {

std::vector<double> clamped_knots(std::size_t count) {
    const std::size_t p = kBsplineDegree;
    const std::size_t spans = count - p;
    std::vector<double> knots(count + p + 1, 0.0);
    for (std::size_t i = 0; i <= p; ++i) knots[knots.size() - 1 - i] = 1.0;
    for (std::size_t i = 1; i < spans; ++i) knots[p + i] = static_cast<double>(i) / static_cast<double>(spans);
    return knots;
}

double chord_position(std::span<const double> weights, std::span<const double> abscissae) {
    double x = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) x += weights[k] * abscissae[k];
    return x;
}

}  // namespace

void BsplineGenome::validate() const {
    PANELOPT_REQUIRE(degree == kBsplineDegree, ErrorCode::InvalidArgument, "only cubic B-splines are supported");
    const auto min_count = static_cast<std::size_t>(degree + 1);
    PANELOPT_REQUIRE(upper_coeffs.size() >= min_count && lower_coeffs.size() >= min_count,
                     ErrorCode::InvalidArgument, "each surface needs at least degree+1 coefficients");
    for (double c : flatten()) {
        PANELOPT_REQUIRE(std::isfinite(c), ErrorCode::InvalidArgument, "non-finite genome coefficient");
    }
}

void BsplineGenome::pin() noexcept {
    for (auto* side : {&upper_coeffs, &lower_coeffs}) {
        if (side->empty()) continue;
        side->front() = 0.0;
        side->back() = 0.0;
    }
}

bool BsplineGenome::is_pinned(std::size_t flat_index) const noexcept {
    const std::size_t nu = upper_coeffs.size();
    if (flat_index < nu) return flat_index == 0 || flat_index + 1 == nu;
    const std::size_t k = flat_index - nu;
    return k == 0 || k + 1 == lower_coeffs.size();
}

std::vector<double> BsplineGenome::flatten() const {
    std::vector<double> flat(upper_coeffs);
    flat.insert(flat.end(), lower_coeffs.begin(), lower_coeffs.end());
    return flat;
}

BsplineGenome BsplineGenome::unflatten(std::span<const double> flat, std::size_t upper_count) {
    BsplineGenome g;
    g.upper_coeffs.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(upper_count));
    g.lower_coeffs.assign(flat.begin() + static_cast<std::ptrdiff_t>(upper_count), flat.end());
    return g;
}

BsplineGenome BsplineGenome::symmetric(std::vector<double> upper) {
    BsplineGenome g;
    g.lower_coeffs.resize(upper.size());
    std::transform(upper.begin(), upper.end(), g.lower_coeffs.begin(), [](double c) { return -c; });
    g.upper_coeffs = std::move(upper);
    g.pin();
    return g;
}

std::vector<double> control_abscissae(std::size_t count) {
    std::vector<double> xs(count, 0.0);
    const double last = static_cast<double>(count - 2);
    for (std::size_t k = 1; k < count; ++k) {
        xs[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k - 1) / last));
    }
    xs.back() = 1.0;
    return xs;
}

std::vector<double> basis_weights(std::size_t count, double u) {
    const std::size_t p = kBsplineDegree;
    const auto knots = clamped_knots(count);
    std::vector<double> w(count, 0.0);
    if (u >= 1.0) {
        w.back() = 1.0;
        return w;
    }
    if (u <= 0.0) {
        w.front() = 1.0;
        return w;
    }
    std::size_t span = p;
    while (span + 1 < count && knots[span + 1] <= u) ++span;

    // Cox-de Boor, triangular table restricted to the non-zero functions.
    std::vector<double> n(p + 1, 0.0), left(p + 1, 0.0), right(p + 1, 0.0);
    n[0] = 1.0;
    for (std::size_t j = 1; j <= p; ++j) {
        left[j] = u - knots[span + 1 - j];
        right[j] = knots[span + j] - u;
        double saved = 0.0;
        for (std::size_t r = 0; r < j; ++r) {
            const double tmp = n[r] / (right[r + 1] + left[j - r]);
            n[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        n[j] = saved;
    }
    for (std::size_t j = 0; j <= p; ++j) w[span - p + j] = n[j];
    return w;
}

double parameter_at_chord(std::size_t count, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const auto abscissae = control_abscissae(count);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (chord_position(basis_weights(count, mid), abscissae) < x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double surface_ordinate(std::span<const double> coeffs, double x) {
    const auto w = basis_weights(coeffs.size(), parameter_at_chord(coeffs.size(), x));
    double y = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) y += w[k] * coeffs[k];
    return y;
}

Airfoil from_bspline(const BsplineGenome& genome, std::size_t n, std::string name) {
    genome.validate();
    PANELOPT_REQUIRE(n >= 8 && n % 2 == 0, ErrorCode::InvalidArgument,
                     "panel count must be even and >= 8, got " + std::to_string(n));
    PANELOPT_REQUIRE(genome.upper_coeffs.front() == 0.0 && genome.upper_coeffs.back() == 0.0 &&
                         genome.lower_coeffs.front() == 0.0 && genome.lower_coeffs.back() == 0.0,
                     ErrorCode::InvalidArgument, "genome endpoints must be pinned to zero");

    const std::size_t half = n / 2;
    const auto xs = chord_stations(half + 1, Spacing::Cosine);
    std::vector<Point2> pts(n + 1);
    pts[0] = {1.0, 0.0};
    pts[half] = {0.0, 0.0};
    pts[n] = {1.0, 0.0};
    for (std::size_t k = 1; k < half; ++k) {
        const double x = xs[k];
        const double yu = surface_ordinate(genome.upper_coeffs, x);
        const double yl = surface_ordinate(genome.lower_coeffs, x);
        if (!(yu > yl)) {
            throw Error(ErrorCode::InvalidGeometry,
                        "upper surface not above lower surface at x = " + std::to_string(x));
        }
        pts[half - k] = {x, yu};
        pts[half + k] = {x, yl};
    }
    return Airfoil(std::move(name), std::move(pts));
}

BsplineGenome fit_genome(const Airfoil& airfoil, std::size_t count) {
    PANELOPT_REQUIRE(count >= kBsplineDegree + 1, ErrorCode::InvalidArgument, "too few coefficients to fit");
    const auto& pts = airfoil.points();
    const std::size_t le = airfoil.leading_edge_index();

    auto fit_side = [&](std::size_t first, std::size_t last) {
        // Unknowns are the count-2 free coefficients; the pinned ones are zero.
        const std::size_t m = count - 2;
        DenseMatrix normal(m, m);
        std::vector<double> rhs(m, 0.0);
        for (std::size_t i = first; i <= last; ++i) {
            const double x = pts[i].x;
            if (x <= 0.0 || x >= 1.0) continue;
            const auto w = basis_weights(count, parameter_at_chord(count, x));
            for (std::size_t a = 0; a < m; ++a) {
                rhs[a] += w[a + 1] * pts[i].y;
                for (std::size_t b = 0; b < m; ++b) normal(a, b) += w[a + 1] * w[b + 1];
            }
        }
        const auto free = solve_dense(std::move(normal), std::move(rhs));
        std::vector<double> coeffs(count, 0.0);
        std::copy(free.begin(), free.end(), coeffs.begin() + 1);
        return coeffs;
    };

    BsplineGenome g;
    g.upper_coeffs = fit_side(0, le);
    g.lower_coeffs = fit_side(le, pts.size() - 1);
    g.pin();
    return g;
}

}  // namespace panelopt
