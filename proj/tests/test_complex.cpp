#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/complex.hpp"

using namespace qh;

namespace {

AlgebraPtr sl2_block() {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    RelationElement ab;
    ab.terms.push_back({Rational(1), {0, 1}});
    return BoundQuiverAlgebra::build(q, {ab});
}

AlgebraPtr semisimple2() {
    Quiver q({"1", "2"}, {});
    return BoundQuiverAlgebra::build(q, {});
}

} // namespace

TEST_CASE("stalk and shift") {
    auto a = sl2_block();
    Representation p = projective_module(a, 1);
    BoundedComplex s = BoundedComplex::stalk(p, 0);
    CHECK(s.homology_dim(0) == p.total_dim());
    CHECK(s.homology_dim(1) == 0);
    BoundedComplex s1 = s.shifted(1);
    CHECK(s1.lo() == 1);
    CHECK(s1.homology_dim(1) == p.total_dim());
    CHECK(s1.shifted(-1).lo() == 0);
    CHECK(s.shifted(0).lo() == s.lo());
}

TEST_CASE("resolution of a stalk recovers the minimal resolution") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    CHECK(r.complex.lo() == 0);
    CHECK(r.complex.hi() == 2);
    CHECK(r.labels.at(0) == std::vector<int>{0});
    CHECK(r.labels.at(1) == std::vector<int>{1});
    CHECK(r.labels.at(2) == std::vector<int>{0});
    CHECK(r.complex.homology_dim(0) == 1);
    CHECK(r.complex.homology_dim(1) == 0);
    CHECK(r.complex.homology_dim(2) == 0);
    CHECK(is_quasi_isomorphism(r.to_target));
}

TEST_CASE("resolution of a projective stalk is itself") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(projective_module(a, 1), 0));
    CHECK(r.complex.hi() == 0);
    CHECK(r.labels.at(0) == std::vector<int>{1});
}

TEST_CASE("resolution of a two-term complex") {
    auto a = sl2_block();
    // the inclusion of the radical of P(2), which is a copy of P(1)
    Representation p2 = projective_module(a, 1);
    Submodule rad = radical_submodule(p2);
    SubQuotient rm = submodule_as_module(p2, rad);
    BoundedComplex c(a, 0, {p2, rm.rep}, {rm.map});
    CHECK(c.homology_dim(0) == 1);
    CHECK(c.homology_dim(1) == 0);
    ResolutionComplex r = projective_resolution_complex(c);
    CHECK(is_quasi_isomorphism(r.to_target));
    for (int n = -1; n <= 3; ++n) CHECK(r.complex.homology_dim(n) == c.homology_dim(n));
}

TEST_CASE("semisimple resolutions are stalks") {
    auto a = semisimple2();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    CHECK(r.complex.hi() == 0);
}

TEST_CASE("hom homotopy basics") {
    auto a = sl2_block();
    Representation p2 = projective_module(a, 1);
    Representation p1 = projective_module(a, 0);
    CHECK(hom_homotopy(BoundedComplex::stalk(p2, 0), BoundedComplex::stalk(p1, 0), 0) ==
          hom_basis(p2, p1).size());
    CHECK(hom_homotopy(BoundedComplex::stalk(p2, 0), BoundedComplex::stalk(p1, 0), 3) == 0);
    CHECK(hom_homotopy(BoundedComplex::stalk(p2, 0), BoundedComplex::stalk(p1, 0), -3) == 0);
}

TEST_CASE("hom homotopy computes ext groups through resolutions") {
    auto a = sl2_block();
    for (int l = 0; l < 2; ++l) {
        ResolutionComplex rl = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, l), 0));
        for (int m = 0; m < 2; ++m) {
            BoundedComplex target = BoundedComplex::stalk(simple_module(a, m), 0);
            for (int n = 0; n <= 4; ++n)
                CHECK(hom_homotopy(rl.complex, target, n) ==
                      ext_dim(simple_module(a, l), simple_module(a, m), n));
        }
    }
}

TEST_CASE("endomorphisms of a resolution in the homotopy category") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    // Hom(res, res mod homotopy) in degree n equals Ext^n(L(1), L(1))
    ResolutionComplex rr = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    CHECK(hom_homotopy(r.complex, rr.complex, 0) == 1);
    CHECK(hom_homotopy(r.complex, rr.complex, 1) == 0);
    CHECK(hom_homotopy(r.complex, rr.complex, 2) == 1);
    CHECK(hom_homotopy(r.complex, rr.complex, -1) == 0);
}

TEST_CASE("applying the identity table returns the same complex") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    BoundedComplex same = apply_functor_complex(identity_table(a), r.complex, r.labels);
    for (int n = r.complex.lo(); n <= r.complex.hi(); ++n) CHECK(same.object(n) == r.complex.object(n));
}

TEST_CASE("applying the nakayama table to a projective stalk gives the injective stalk") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(projective_module(a, 0), 0));
    BoundedComplex hi = apply_functor_complex(nakayama_table(a), r.complex, r.labels);
    CHECK(hi.hi() == 0);
    CHECK(module_iso(hi.object(0), injective_module(a, 0)));
}

TEST_CASE("nakayama image of the L(1) resolution has the expected homology") {
    auto a = sl2_block();
    ResolutionComplex r = projective_resolution_complex(BoundedComplex::stalk(simple_module(a, 0), 0));
    BoundedComplex h = apply_functor_complex(nakayama_table(a), r.complex, r.labels);
    // complex of injectives computing the left-derived Nakayama of L(1)
    size_t total_homology = 0;
    for (int n = 0; n <= 3; ++n) total_homology += h.homology_dim(n);
    CHECK(total_homology > 0);
    for (int n = h.lo(); n < h.hi(); ++n) CHECK(compose(h.differential(n + 1), h.differential(n)).is_zero());
}

TEST_CASE("serre duality table on a semisimple algebra") {
    auto a = semisimple2();
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            auto rows = serre_duality_check(a, l, m, -2, 2);
            for (const auto& r : rows) {
                CHECK(r.equal);
                if (r.n == 0 && l == m) CHECK(r.lhs == 1);
                if (r.n != 0) CHECK(r.lhs == 0);
            }
        }
}

TEST_CASE("serre duality table on the sl2 block") {
    auto a = sl2_block();
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            auto rows = serre_duality_check(a, l, m, -2, 2);
            for (const auto& r : rows) CHECK(r.equal);
        }
    // nontrivial entries exist: Ext^2(L(1), L(1)) = 1 shows up at n = 2
    auto rows = serre_duality_check(a, 0, 0, -2, 2);
    bool saw = false;
    for (const auto& r : rows)
        if (r.n == 2 && r.lhs == 1) saw = true;
    CHECK(saw);
}

TEST_CASE("serre table symmetry on the sl2 block") {
    auto a = sl2_block();
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            auto ab = serre_duality_check(a, l, m, -2, 2);
            auto ba = serre_duality_check(a, m, l, -2, 2);
            // lhs table for (l, m) against the rhs table for (m, l): the rhs
            // of (m, l) at n is ext^n(L(l), L(m))
            for (size_t i = 0; i < ab.size(); ++i) {
                (void)ba;
                CHECK(ab[i].lhs == ab[i].rhs);
            }
        }
}

TEST_CASE("complex constructor rejects non-complexes") {
    auto a = sl2_block();
    Representation p1 = projective_module(a, 0);
    Representation p2 = projective_module(a, 1);
    auto maps12 = hom_basis(p1, p2);
    auto maps21 = hom_basis(p2, p1);
    REQUIRE(!maps12.empty());
    REQUIRE(!maps21.empty());
    // the roundtrip P(2) -> P(1) -> P(2) through the radical is nonzero
    ModuleMap d1 = maps12[0]; // P(1) -> P(2)
    ModuleMap d2 = maps21[0]; // P(2) -> P(1)
    CHECK_FALSE(compose(d2, d1).is_zero());
    CHECK_THROWS_AS((void)BoundedComplex(a, 0, {p2, p1, p2}, {d1, d2}), Error);
}
