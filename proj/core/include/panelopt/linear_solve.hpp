#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace panelopt {

/// Row-major dense matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }

    [[nodiscard]] std::span<double> data() noexcept { return data_; }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Pivots with magnitude at or below this are treated as exactly singular.
inline constexpr double kSingularPivot = 1e-300;

/// Overwrites `a` with its LU factors (partial pivoting) and `rhs` with the
/// solution. Throws Error(SingularSystem) on a vanishing pivot.
void lu_solve_in_place(DenseMatrix& a, std::span<double> rhs);

/// Convenience wrapper that leaves the inputs untouched.
std::vector<double> solve_dense(DenseMatrix a, std::vector<double> rhs);

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);
double infinity_norm(const DenseMatrix& a) noexcept;
double infinity_norm(std::span<const double> v) noexcept;

}  // namespace panelopt
