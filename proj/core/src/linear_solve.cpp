#include "panelopt/linear_solve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "panelopt/error.hpp"

namespace panelopt {

void lu_solve_in_place(DenseMatrix& a, std::span<double> rhs) {
    const std::size_t n = a.rows();
    PANELOPT_REQUIRE(a.cols() == n && rhs.size() == n, ErrorCode::InvalidArgument,
                     "LU solve needs a square system with matching right-hand side");

    // Right-looking elimination; rows are swapped physically so the trailing
    // update walks contiguous memory.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (!(best > kSingularPivot)) {
            throw Error(ErrorCode::SingularSystem, "vanishing pivot in column " + std::to_string(k));
        }
        if (piv != k) {
            std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(piv).begin());
            std::swap(rhs[k], rhs[piv]);
        }

        const double inv_pivot = 1.0 / a(k, k);
        const double* __restrict pivot_row = a.row(k).data();
        for (std::size_t i = k + 1; i < n; ++i) {
            double* __restrict target = a.row(i).data();
            const double l = target[k] * inv_pivot;
            target[k] = l;
            for (std::size_t j = k + 1; j < n; ++j) target[j] -= l * pivot_row[j];
            rhs[i] -= l * rhs[k];
        }
    }

    for (std::size_t ii = n; ii-- > 0;) {
        const auto r = a.row(ii);
        double s = rhs[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= r[j] * rhs[j];
        rhs[ii] = s / r[ii];
    }
}

std::vector<double> solve_dense(DenseMatrix a, std::vector<double> rhs) {
    lu_solve_in_place(a, rhs);
    return rhs;
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto r = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += r[j] * x[j];
        y[i] = s;
    }
    return y;
}

double infinity_norm(const DenseMatrix& a) noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (double v : a.row(i)) s += std::abs(v);
        best = std::max(best, s);
    }
    return best;
}

double infinity_norm(std::span<const double> v) noexcept {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::abs(x));
    return best;
}

}  // namespace panelopt
