#pragma once

#include "qh/solver.hpp"
#include "qh/stratification.hpp"

#include <string>
#include <vector>

namespace qh {

// Basic bound-quiver presentation of the endomorphism algebra of a direct sum
// of pairwise non-isomorphic indecomposables. Multiplication follows the
// global traversal convention: the product x.y acts by x first, so modules
// over the presentation correspond to Hom(-, X) with its right End-action.
struct PresentedAlgebra {
    AlgebraPtr algebra;
    Representation amodule; // X over the base algebra
    std::vector<Representation> summands;
    std::vector<ModuleMap> summand_inclusions;
    std::vector<ModuleMap> summand_projections;
    std::vector<ModuleMap> basis_endos; // concrete endo of X per presentation basis path
};

PresentedAlgebra present_endomorphism_algebra(const AlgebraPtr& base, const std::vector<Representation>& summands,
                                              const std::vector<std::string>& vertex_names);

// Hom(M, X) as a module over the presentation.
Representation hom_module(const PresentedAlgebra& b, const Representation& m);
// Contravariant action on maps: f: M -> N induces Hom(N, X) -> Hom(M, X).
ModuleMap hom_module_map(const PresentedAlgebra& b, const ModuleMap& f);

// Hom(X, M) with its right End(X)-action, as a module over the opposite of
// the presentation (precomposition reverses the traversal order).
Representation covariant_hom_module(const PresentedAlgebra& b, const Representation& m);

// Cartan matrix c[l][m] = multiplicity of L(l) in P(m).
Matrix cartan_matrix(const AlgebraPtr& a);
// Cartan data match up to a permutation of the labels.
bool cartan_equivalent(const AlgebraPtr& a, const AlgebraPtr& b);

} // namespace qh
