#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "algal/errors.hpp"

namespace algal {

// Dense row-major matrix of doubles. Small and boring on purpose; all the
// numeric work in this project runs through it.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return v_.size(); }

    double& operator()(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    double* row(int r) { return v_.data() + static_cast<std::size_t>(r) * cols_; }
    const double* row(int r) const { return v_.data() + static_cast<std::size_t>(r) * cols_; }

    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    bool all_finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

// C = A * B
inline void matmul_into(const Matrix& a, const Matrix& b, Matrix& c) {
    require(a.cols() == b.rows(), Errc::shape_mismatch, "matmul: inner dimensions differ");
    c = Matrix(a.rows(), b.cols());
    const int n = a.rows(), k = a.cols(), m = b.cols();
    for (int i = 0; i < n; ++i) {
        double* ci = c.row(i);
        const double* ai = a.row(i);
        for (int p = 0; p < k; ++p) {
            const double av = ai[p];
            if (av == 0.0) continue;
            const double* bp = b.row(p);
            for (int j = 0; j < m; ++j) ci[j] += av * bp[j];
        }
    }
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    Matrix c;
    matmul_into(a, b, c);
    return c;
}

// C = A * B^T
inline Matrix matmul_bt(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), Errc::shape_mismatch, "matmul_bt: inner dimensions differ");
    Matrix c(a.rows(), b.rows());
    const int n = a.rows(), k = a.cols(), m = b.rows();
    for (int i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (int j = 0; j < m; ++j) {
            const double* bj = b.row(j);
            double s = 0.0;
            for (int p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
    return c;
}

// C = A^T * B
inline Matrix matmul_at(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), Errc::shape_mismatch, "matmul_at: inner dimensions differ");
    Matrix c(a.cols(), b.cols());
    const int n = a.rows(), k = a.cols(), m = b.cols();
    for (int p = 0; p < n; ++p) {
        const double* ap = a.row(p);
        const double* bp = b.row(p);
        for (int i = 0; i < k; ++i) {
            const double av = ap[i];
            if (av == 0.0) continue;
            double* ci = c.row(i);
            for (int j = 0; j < m; ++j) ci[j] += av * bp[j];
        }
    }
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline double squared_distance(const double* a, const double* b, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

} // namespace algal
