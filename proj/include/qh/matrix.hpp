#pragma once

#include "qh/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qh {

// Dense matrix over the rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r)
            for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: sum shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: diff shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
        return r;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix r = a;
        for (auto& e : r.entries_) e *= s;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Gauss-Jordan. Returns the reduced row-echelon form and the pivot columns
    // (strictly increasing).
    std::pair<Matrix, std::vector<size_t>> rref() const {
        Matrix m = *this;
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = row;
            while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
            if (sel == rows_) continue;
            if (sel != row)
                for (size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(row, c));
            Rational inv = m.at(row, col).inverse();
            for (size_t c = col; c < cols_; ++c) m.at(row, c) *= inv;
            for (size_t r = 0; r < rows_; ++r) {
                if (r == row || m.at(r, col).is_zero()) continue;
                Rational f = m.at(r, col);
                for (size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return {m, pivots};
    }

    size_t rank() const { return rref().second.size(); }

    // Basis of the right kernel, as rows of the returned matrix (dim x cols).
    Matrix kernel_basis() const {
        auto [r, pivots] = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<size_t> free_cols;
        for (size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix k(free_cols.size(), cols_);
        for (size_t i = 0; i < free_cols.size(); ++i) {
            size_t fc = free_cols[i];
            k.at(i, fc) = Rational(1);
            for (size_t pr = 0; pr < pivots.size(); ++pr) k.at(i, pivots[pr]) = -r.at(pr, fc);
        }
        return k;
    }

    // Some solution x of (*this) * x = rhs, or nullopt if inconsistent.
    // Free variables are set to zero (first solution in echelon order).
    std::optional<Matrix> solve(const Matrix& rhs) const {
        if (rhs.rows_ != rows_) throw std::invalid_argument("Matrix: solve shape mismatch");
        Matrix aug(rows_, cols_ + rhs.cols_);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            for (size_t c = 0; c < rhs.cols_; ++c) aug.at(r, cols_ + c) = rhs.at(r, c);
        }
        auto [red, pivots] = aug.rref();
        for (size_t p : pivots)
            if (p >= cols_) return std::nullopt;
        Matrix x(cols_, rhs.cols_);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            for (size_t c = 0; c < rhs.cols_; ++c) x.at(pivots[pr], c) = red.at(pr, cols_ + c);
        return x;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square");
        Matrix m = *this;
        Rational det(1);
        for (size_t col = 0; col < cols_; ++col) {
            size_t sel = col;
            while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
            if (sel == rows_) return Rational(0);
            if (sel != col) {
                for (size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(col, c));
                det = -det;
            }
            det *= m.at(col, col);
            Rational inv = m.at(col, col).inverse();
            for (size_t r = col + 1; r < rows_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                Rational f = m.at(r, col) * inv;
                for (size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(col, c);
            }
        }
        return det;
    }

    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        auto x = solve(identity(rows_));
        if (!x) return std::nullopt;
        if (!((*this) * *x == identity(rows_))) return std::nullopt;
        return x;
    }

    // Stack b below this matrix.
    Matrix vstack(const Matrix& b) const {
        if (empty() && rows_ == 0) {
            if (cols_ == 0 || cols_ == b.cols_) return b;
        }
        if (b.rows_ == 0) return *this;
        if (cols_ != b.cols_) throw std::invalid_argument("Matrix: vstack width mismatch");
        Matrix r(rows_ + b.rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t c = 0; c < cols_; ++c) r.at(i, c) = at(i, c);
        for (size_t i = 0; i < b.rows_; ++i)
            for (size_t c = 0; c < cols_; ++c) r.at(rows_ + i, c) = b.at(i, c);
        return r;
    }

    Matrix row(size_t r) const {
        Matrix m(1, cols_);
        for (size_t c = 0; c < cols_; ++c) m.at(0, c) = at(r, c);
        return m;
    }

    Matrix col(size_t c) const {
        Matrix m(rows_, 1);
        for (size_t r = 0; r < rows_; ++r) m.at(r, 0) = at(r, c);
        return m;
    }

    size_t hash() const {
        size_t h = rows_ * 1315423911u + cols_;
        for (const auto& e : entries_) h = h * 1000003u + e.hash();
        return h;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> entries_;
};

} // namespace qh
