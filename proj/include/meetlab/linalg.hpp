#pragma once
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "meetlab/errors.hpp"

namespace meetlab {

// Dense row-major matrix of doubles. Small and boring on purpose: every table
// in this library is at most a few thousand entries per side.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const double& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
    const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

    const std::vector<double>& data() const { return data_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::fabs(v));
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Solves A x = b by Gaussian elimination with partial pivoting. Consumes its
// arguments. Throws SingularSystem naming the column whose pivot vanished.
inline std::vector<double> solve_dense(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (n != a.cols() || n != static_cast<int>(b.size()))
        throw InvalidParams("solve_dense: shape mismatch");
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::fabs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(a(i, k));
            if (v > best) { best = v; piv = i; }
        }
        if (best < 1e-12)
            throw SingularSystem("singular linear system at column " + std::to_string(k), k);
        if (piv != k) {
            double* rk = a.row(k);
            double* rp = a.row(piv);
            for (int j = k; j < n; ++j) std::swap(rk[j], rp[j]);
            std::swap(b[k], b[piv]);
        }
        const double* rk = a.row(k);
        const double inv = 1.0 / rk[k];
        for (int i = k + 1; i < n; ++i) {
            double* ri = a.row(i);
            const double f = ri[k] * inv;
            if (f == 0.0) continue;
            ri[k] = 0.0;
            for (int j = k + 1; j < n; ++j) ri[j] -= f * rk[j];
            b[i] -= f * b[k];
        }
    }
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        const double* ri = a.row(i);
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= ri[j] * x[j];
        x[i] = s / ri[i];
    }
    return x;
}

} // namespace meetlab
