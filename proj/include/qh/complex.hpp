#pragma once

#include "qh/serre.hpp"

#include <map>
#include <vector>

namespace qh {

// Bounded chain complex, homological indexing: d_n: C_n -> C_{n-1}.
class BoundedComplex {
public:
    static BoundedComplex zero(AlgebraPtr a);
    static BoundedComplex stalk(const Representation& m, int degree);
    // objects[i] sits in degree lo + i; diffs[i]: objects[i+1] -> objects[i]
    BoundedComplex(AlgebraPtr a, int lo, std::vector<Representation> objects, std::vector<ModuleMap> diffs);

    const AlgebraPtr& algebra() const { return algebra_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }
    bool is_zero_complex() const { return objects_.empty(); }

    Representation object(int degree) const;
    // d_degree: C_degree -> C_{degree-1}
    ModuleMap differential(int degree) const;

    BoundedComplex shifted(int k) const; // C[k]_n = C_{n-k}, differential negated for odd k

    size_t homology_dim(int degree) const;
    // homology as a module together with cycle inclusion data
    Representation homology_module(int degree) const;

private:
    AlgebraPtr algebra_;
    int lo_ = 0;
    std::vector<Representation> objects_;
    std::vector<ModuleMap> diffs_;
};

struct ChainMap {
    BoundedComplex source;
    BoundedComplex target;
    std::map<int, ModuleMap> components; // degreewise, zero where absent
};

// Projective resolution of a bounded complex: degreewise projective complex
// with a quasi-isomorphism onto the input, built by stepwise minimal covers
// of the cone cycles. Labels record the indecomposable summands per degree.
struct ResolutionComplex {
    BoundedComplex complex;
    ChainMap to_target;
    std::map<int, std::vector<int>> labels;
};

ResolutionComplex projective_resolution_complex(const BoundedComplex& c, int cap = 20);

// whether a chain map induces isomorphisms on homology in every degree
bool is_quasi_isomorphism(const ChainMap& f);

// dim of degree-n chain maps modulo homotopy: H_{-n} of the total Hom
// complex (Koszul signs); the source must be degreewise projective.
size_t hom_homotopy(const BoundedComplex& cp, const BoundedComplex& d, int n);

// degreewise application of a functor recorded on projectives
BoundedComplex apply_functor_complex(const ProjFunctorTable& table, const BoundedComplex& cp,
                                     const std::map<int, std::vector<int>>& labels);

struct SerreTableRow {
    int n = 0;
    size_t lhs = 0;
    size_t rhs = 0;
    bool equal = false;
};

// lhs(n) = dim Hom_Db(L(l), (LH L(m))[n]); rhs(n) = dim Ext^n(L(m), L(l)).
std::vector<SerreTableRow> serre_duality_check(const AlgebraPtr& a, int label_l, int label_m, int n_lo, int n_hi,
                                               int cap = 20);

} // namespace qh
