#pragma once

#include "qh/algebra.hpp"
#include "qh/matrix.hpp"
#include "qh/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// Finite dimensional module presented as a quiver representation: one space
// per vertex, one matrix per arrow (dims[target] x dims[source]). A path acts
// by composing arrow matrices in traversal order, so for basis paths p, q the
// action of p.q is act(q) * act(p).
class Representation {
public:
    Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> arrow_actions);

    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    size_t num_vertices() const { return dims_.size(); }
    int dim_at(int v) const { return dims_[v]; }
    const std::vector<int>& dims() const { return dims_; }
    size_t total_dim() const { return total_; }
    size_t offset(int v) const { return offsets_[v]; }
    const Matrix& arrow_action(int arrow) const { return actions_[arrow]; }

    // Composite action of an arrow sequence starting at the given vertex.
    Matrix path_action(int source_vertex, const std::vector<int>& arrows) const;
    // Action of an algebra element on the total space.
    Matrix element_action(const BoundQuiverAlgebra::Elem& e) const;
    // Action of the i-th algebra basis path on the total space.
    Matrix basis_action(int basis_index) const;

    friend bool operator==(const Representation& a, const Representation& b);
    friend bool operator!=(const Representation& a, const Representation& b) { return !(a == b); }

private:
    AlgebraPtr algebra_;
    std::vector<int> dims_;
    std::vector<size_t> offsets_;
    size_t total_ = 0;
    std::vector<Matrix> actions_;
};

// Module homomorphism, one block per vertex intertwining the arrow actions.
struct ModuleMap {
    Representation source;
    Representation target;
    std::vector<Matrix> blocks; // blocks[v]: dims_target[v] x dims_source[v]

    Matrix total() const; // block-diagonal matrix on total spaces
    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_iso() const;
};

ModuleMap make_map(const Representation& src, const Representation& dst, std::vector<Matrix> blocks);
ModuleMap zero_map(const Representation& src, const Representation& dst);
ModuleMap identity_map(const Representation& m);
ModuleMap compose(const ModuleMap& f, const ModuleMap& g); // f then g, requires f.target == g.source
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const Rational& c, const ModuleMap& f);

// Submodule of a parent representation, one subspace per vertex, closed
// under every arrow action.
struct Submodule {
    std::vector<Subspace> per_vertex;

    size_t total_dim() const;
    int dim_at(int v) const { return static_cast<int>(per_vertex[v].dim()); }
};

Submodule zero_submodule(const Representation& m);
Submodule full_submodule(const Representation& m);
bool submodule_contains(const Representation& m, const Submodule& a, const Submodule& b); // b <= a
Submodule submodule_sum(const Representation& m, const Submodule& a, const Submodule& b);
Submodule submodule_intersect(const Representation& m, const Submodule& a, const Submodule& b);

// Smallest submodule containing the given per-vertex spans.
Submodule submodule_generated(const Representation& m, const std::vector<Subspace>& seed);
// Largest submodule contained in the given per-vertex spaces.
Submodule largest_submodule_inside(const Representation& m, const std::vector<Subspace>& bound);

struct SubQuotient {
    Representation rep;
    ModuleMap map; // inclusion (for sub) or projection (for quotient)
};

SubQuotient submodule_as_module(const Representation& m, const Submodule& s);
SubQuotient quotient_module(const Representation& m, const Submodule& s);

// Direct sums with the canonical inclusions/projections.
struct DirectSum {
    Representation rep;
    std::vector<ModuleMap> inclusions;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);

// Kernel and image of a module map, as submodules of source resp. target.
Submodule kernel_submodule(const ModuleMap& f);
Submodule image_submodule(const ModuleMap& f);

Representation simple_module(const AlgebraPtr& a, int vertex);
Representation projective_module(const AlgebraPtr& a, int vertex);
Representation injective_module(const AlgebraPtr& a, int vertex);

// Left multiplication by an algebra basis element, as a map P(v) -> P(u) for
// a basis path u -> v (acting on paths-from components).
ModuleMap projective_left_multiplication(const AlgebraPtr& a, int basis_index);

Representation dualize(const Representation& m);         // over opposite(A)
ModuleMap dualize_map(const ModuleMap& f);               // contravariant

// Basis of Hom_A(M, N).
std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
// Coordinates of f in the basis returned by hom_basis (exact).
std::vector<Rational> hom_coordinates(const std::vector<ModuleMap>& basis, const ModuleMap& f);

Submodule trace(const Representation& m, const Representation& n);
// Fast path: trace of a direct sum of projectives P(v), v in labels,
// computed as the submodule generated by those vertex coordinate spaces.
Submodule trace_of_projectives(const std::vector<int>& vertex_labels, const Representation& n);

Submodule radical_submodule(const Representation& m);
Submodule socle_submodule(const Representation& m);
std::vector<std::pair<int, int>> head_multiset(const Representation& m);  // (vertex, multiplicity)
std::vector<std::pair<int, int>> socle_multiset(const Representation& m);
// Composition factor multiplicities; for quiver representations these are
// the vertex dimensions.
std::vector<int> composition_factors(const Representation& m);

struct Cover {
    Representation proj;
    ModuleMap map;           // surjection proj -> M
    std::vector<int> labels; // vertex label per indecomposable summand
};
Cover projective_cover(const Representation& m);

struct Hull {
    Representation inj;
    ModuleMap map; // embedding M -> inj
    std::vector<int> labels;
};
Hull injective_hull(const Representation& m);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

struct MinimalResolution {
    // terms[0] = P_0 with augmentation aug: P_0 -> M; d[i]: terms[i+1] -> terms[i]
    std::vector<Representation> terms;
    std::vector<std::vector<int>> labels;
    ModuleMap augmentation;
    std::vector<ModuleMap> differentials;
    bool terminated = false; // resolution reached zero within the cap
};
MinimalResolution minimal_resolution(const Representation& m, int cap);

size_t ext_dim(const Representation& m, const Representation& n, int degree, int cap = 20);

// max over simples of projective dimension; nullopt means some resolution is
// still nonzero at the cap.
std::optional<int> global_dimension(const AlgebraPtr& a, int cap = 20);

} // namespace qh
