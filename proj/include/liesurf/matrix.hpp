#pragma once

#include <optional>
#include <vector>

#include "liesurf/scalar.hpp"

namespace liesurf {

/// Dense matrix over the Gaussian rationals. Everything here is exact;
/// rank and kernel questions never see a tolerance.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i) {
            for (size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (size_t j = 0; j < y.cols_; ++j) {
                    if (y(k, j).is_zero()) continue;
                    r(i, j) += x(i, k) * y(k, j);
                }
            }
        }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        std::vector<Scalar> r(rows_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) {
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
            }
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Gauss-Jordan to reduced row echelon form; returns pivot column list.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = row;
            while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != row) swap_rows(sel, row);
            Scalar inv = Scalar(1) / (*this)(row, col);
            for (size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                Scalar f = (*this)(i, col);
                for (size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix t = *this;
        return t.rref().size();
    }

    /// Basis of the right kernel, one vector per free column,
    /// in reduced echelon normalization.
    std::vector<std::vector<Scalar>> kernel_basis() const {
        Matrix t = *this;
        std::vector<size_t> pivots = t.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Scalar>> basis;
        for (size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Scalar> v(cols_);
            v[free] = Scalar(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -t(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
        Matrix aug(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<size_t> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Scalar> x(cols_);
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
        return x;
    }

    /// Inverse of a square matrix; throws when singular.
    Matrix inverse() const {
        Matrix aug(rows_, 2 * cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = Scalar(1);
        }
        std::vector<size_t> pivots = aug.rref();
        if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
            throw DomainError("matrix: singular, no inverse");
        Matrix inv(rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
};

/// Row-span equality via identical reduced echelon forms.
inline bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b) {
    if (a.empty() && b.empty()) return true;
    size_t cols = a.empty() ? b[0].size() : a[0].size();
    auto echelon = [cols](const std::vector<std::vector<Scalar>>& rows) {
        Matrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        size_t r = m.rref().size();
        Matrix out(r, cols);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
        return out;
    };
    return echelon(a) == echelon(b);
}

inline bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Matrix m(v.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
    return m.solve(v).has_value();
}

}  // namespace liesurf
