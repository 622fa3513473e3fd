#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace harkit {

/// Minimal dense row-major matrix for the small systems used here
/// (Savitzky-Golay projections, shrunken LDA solves). Not a general-purpose
/// linear algebra layer.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Solve A x = b by Gaussian elimination with partial pivoting. A is copied.
inline std::vector<double> solve_dense(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
        if (std::fabs(a(pivot, col)) < 1e-300)
            throw std::runtime_error("solve_dense: singular matrix");
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(col, c), a(pivot, c));
            std::swap(b[col], b[pivot]);
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a(i, c) * x[c];
        x[i] = s / a(i, i);
    }
    return x;
}

/// Cholesky factorization of a symmetric positive-definite matrix (in place,
/// lower triangle). Throws on a non-positive pivot.
inline void cholesky(Matrix& a, const char* context) {
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (d <= 0.0) throw std::runtime_error(std::string(context) + ": matrix not positive definite");
        const double root = std::sqrt(d);
        a(j, j) = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
            a(i, j) = s / root;
        }
    }
}

/// Solve A x = b for SPD A given its Cholesky factor L (lower triangle of a).
inline std::vector<double> cholesky_solve(const Matrix& l, const std::vector<double>& b) {
    const std::size_t n = l.rows();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
        x[i] = s / l(i, i);
    }
    return x;
}

}  // namespace harkit
