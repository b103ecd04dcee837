#pragma once

#include "qh/module.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qh {

// Sparse multivariate polynomial over the rationals, exponent vectors keyed.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(Rational c, std::vector<int> exps = {});
    static MultiPoly variable(int var, int nvars);

    bool is_zero() const { return terms_.empty(); }
    size_t num_vars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    int degree_in(int var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    MultiPoly substitute(int var, const Rational& value) const;

private:
    size_t nvars_ = 0;
    std::map<std::vector<int>, Rational> terms_;

    void add_term(std::vector<int> e, const Rational& c);
};

// Deterministic search for coefficients c making every square block
// sum_i c_i * family[b][i] invertible. Integer sample points first, then a
// full symbolic determinant expansion when the total block size is small.
// Returns nullopt when the expansion certifies that no such c exists.
std::optional<std::vector<Rational>> find_invertible_combination(
    size_t num_params, const std::vector<std::vector<Matrix>>& families, size_t symbolic_cap = 12);

// Endomorphism algebra of a module, in composition order (x.y applies x
// first). Elements are coordinate vectors over the hom basis.
struct EndoAlgebra {
    Representation module;
    std::vector<ModuleMap> basis;
    std::vector<std::vector<std::vector<Rational>>> mult; // mult[i][j] = coords of basis[i] then basis[j]
    std::vector<Rational> unit;
    Subspace radical; // coordinate subspace

    size_t dim() const { return basis.size(); }
    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    ModuleMap realize(const std::vector<Rational>& coords) const;
};

EndoAlgebra endo_algebra(const Representation& m);

struct Decomposition {
    std::vector<Representation> summands; // pairwise non-isomorphic
    std::vector<int> multiplicities;
};

// Indecomposable decomposition via idempotent lifting; NonSplit when the
// endomorphism ring of a summand does not split over Q.
Decomposition decompose(const Representation& m);
Representation basic_part(const Representation& m);

std::optional<ModuleMap> module_iso(const Representation& m, const Representation& n);

// Central linear forms with nondegenerate Gram matrix; the certificate is
// the form's value on each algebra basis path.
std::optional<std::vector<Rational>> symmetric_form_certificate(const AlgebraPtr& a);
inline bool is_symmetric(const AlgebraPtr& a) { return symmetric_form_certificate(a).has_value(); }

// Nakayama permutation nu with P(v) = I(nu(v)) when the algebra is
// self-injective.
std::optional<std::vector<int>> selfinjective_permutation(const AlgebraPtr& a);
inline bool is_selfinjective(const AlgebraPtr& a) { return selfinjective_permutation(a).has_value(); }

// Centre of the algebra as a coordinate subspace.
Subspace centre(const AlgebraPtr& a);

} // namespace qh
