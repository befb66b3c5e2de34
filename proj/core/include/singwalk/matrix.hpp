#pragma once

#include "singwalk/gaussian.hpp"
#include "singwalk/rational.hpp"

#include <stdexcept>
#include <vector>

namespace singwalk {

inline bool scalar_is_unit(const Rational& x) { return !x.is_zero(); }
inline bool scalar_is_unit(const GaussianRational& x) { return !x.is_zero(); }

/// Dense matrix over an exact scalar field. Sized for the transfer-product
/// work in this project (dimensions in the tens), not for numerics at scale.
template <typename S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const S& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    /// Exact inverse by Gauss-Jordan elimination, pivoting on the first
    /// remaining row whose entry is a unit; throws if the matrix is singular.
    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: inverse of a non-square matrix");
        const std::size_t n = rows_;
        Matrix a = *this;
        Matrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && !scalar_is_unit(a.at(piv, col))) ++piv;
            if (piv == n) throw std::domain_error("Matrix: singular, no usable pivot");
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a.at(piv, j), a.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            }
            const S d = S(1) / a.at(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(col, j) = a.at(col, j) * d;
                inv.at(col, j) = inv.at(col, j) * d;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || is_zero(a.at(r, col))) continue;
                const S f = a.at(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                    inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    S determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of a non-square matrix");
        const std::size_t n = rows_;
        Matrix a = *this;
        S det = S(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && !scalar_is_unit(a.at(piv, col))) ++piv;
            if (piv == n) return S{};
            if (piv != col) {
                for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
                det = -det;
            }
            det = det * a.at(col, col);
            const S d = S(1) / a.at(col, col);
            for (std::size_t r = col + 1; r < n; ++r) {
                if (is_zero(a.at(r, col))) continue;
                const S f = a.at(r, col) * d;
                for (std::size_t j = col; j < n; ++j) a.at(r, j) = a.at(r, j) - f * a.at(col, j);
            }
        }
        return det;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

/// Row vector times matrix.
template <typename S>
std::vector<S> row_times(const std::vector<S>& v, const Matrix<S>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
    std::vector<S> r(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    return r;
}

}  // namespace singwalk
