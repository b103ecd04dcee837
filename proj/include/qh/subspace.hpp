#pragma once

#include "qh/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace qh {

// Subspace of Q^n, stored as a reduced-echelon row basis so that equal
// subspaces have identical representation.
class Subspace {
public:
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Span of the rows of m.
    static Subspace span_of_rows(const Matrix& m) {
        Subspace s(m.cols());
        auto [red, pivots] = m.rref();
        Matrix b(pivots.size(), m.cols());
        for (size_t r = 0; r < pivots.size(); ++r)
            for (size_t c = 0; c < m.cols(); ++c) b.at(r, c) = red.at(r, c);
        s.basis_ = b;
        return s;
    }

    static Subspace full(size_t n) { return span_of_rows(Matrix::identity(n)); }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains_vector(const Matrix& column) const {
        if (column.rows() != ambient_ || column.cols() != 1)
            throw std::invalid_argument("Subspace: vector shape mismatch");
        return basis_.transpose().solve(column).has_value();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        for (size_t r = 0; r < other.basis_.rows(); ++r)
            if (!contains_vector(other.basis_.row(r).transpose())) return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        return span_of_rows(a.basis_.vstack(b.basis_));
    }

    // Intersection via the kernel of the stacked coordinate map.
    Subspace intersect(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
        if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
        // rows of [A; B]: a vector in the intersection is x*A = y*B, solve
        // [A^T | -B^T] z = 0 and read off x*A.
        size_t da = dim(), db = other.dim();
        Matrix sys(ambient_, da + db);
        for (size_t r = 0; r < ambient_; ++r) {
            for (size_t c = 0; c < da; ++c) sys.at(r, c) = basis_.at(c, r);
            for (size_t c = 0; c < db; ++c) sys.at(r, da + c) = -other.basis_.at(c, r);
        }
        Matrix ker = sys.kernel_basis();
        Matrix rows(ker.rows(), ambient_);
        for (size_t k = 0; k < ker.rows(); ++k)
            for (size_t j = 0; j < ambient_; ++j) {
                Rational v(0);
                for (size_t c = 0; c < da; ++c) v += ker.at(k, c) * basis_.at(c, j);
                rows.at(k, j) = v;
            }
        return span_of_rows(rows);
    }

    // Image of this subspace under the linear map m (m acts on columns).
    Subspace image_under(const Matrix& m) const {
        if (m.cols() != ambient_) throw std::invalid_argument("Subspace: map shape mismatch");
        if (dim() == 0) return Subspace(m.rows());
        return span_of_rows((m * basis_.transpose()).transpose());
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    size_t ambient_;
    Matrix basis_;
};

} // namespace qh
