#pragma once

#include "qh/quiver.hpp"
#include "qh/subspace.hpp"

#include <memory>
#include <vector>

namespace qh {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// Finite dimensional algebra presented by a quiver with admissible relations.
// The basis consists of path representatives: vertex idempotents first, then
// arrows, then longer surviving paths. Multiplication follows the global path
// convention (p.q traverses p first).
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    struct BasisPath {
        int source = 0;
        int target = 0;
        std::vector<int> arrows; // empty for vertex idempotents
        size_t length() const { return arrows.size(); }
    };

    using SparseElem = std::vector<std::pair<int, Rational>>; // sorted by basis index
    using Elem = std::vector<Rational>;                       // dense, size = dim

    static AlgebraPtr build(Quiver quiver, std::vector<RelationElement> relations, int length_cap = 12);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<RelationElement>& relations() const { return relations_; }
    int length_cap() const { return length_cap_; }

    size_t dim() const { return basis_.size(); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    const BasisPath& basis_path(int i) const { return basis_[i]; }
    int vertex_idempotent(int vertex) const { return vertex_idem_[vertex]; }
    int arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }

    // Smallest length with no surviving path; the radical has nilpotency
    // degree loewy_length().
    int loewy_length() const { return loewy_length_; }

    const SparseElem& product(int i, int j) const { return mult_[i][j]; }

    Elem zero_elem() const { return Elem(dim(), Rational(0)); }
    Elem unit() const;
    Elem multiply(const Elem& a, const Elem& b) const;

    // Span of basis paths of length >= k, inside the dim()-dimensional
    // coordinate space of the algebra.
    Subspace radical_power(int k) const;

    AlgebraPtr opposite() const;

    friend bool operator==(const BoundQuiverAlgebra& a, const BoundQuiverAlgebra& b);

private:
    BoundQuiverAlgebra() = default;

    Quiver quiver_;
    std::vector<RelationElement> relations_;
    int length_cap_ = 12;
    std::vector<BasisPath> basis_;
    std::vector<int> vertex_idem_;
    std::vector<int> arrow_basis_;
    std::vector<std::vector<SparseElem>> mult_;
    int loewy_length_ = 1;
    mutable std::shared_ptr<const BoundQuiverAlgebra> opposite_cache_;
    mutable std::weak_ptr<const BoundQuiverAlgebra> opposite_backlink_;

    void verify_table() const;
};

// Doubled quiver of a directed quiver (arrows only from later to earlier
// vertices in input order), with every forward-then-reversed length-2 path
// set to zero. Quasi-hereditary for the natural order, checked downstream.
AlgebraPtr dual_extension(const Quiver& q, int length_cap = 12);

} // namespace qh
