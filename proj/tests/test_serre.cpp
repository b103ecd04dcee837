#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/serre.hpp"

using namespace qh;

namespace {

AlgebraPtr sl2_block() {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    RelationElement ab;
    ab.terms.push_back({Rational(1), {0, 1}});
    return BoundQuiverAlgebra::build(q, {ab});
}

AlgebraPtr dual_numbers() {
    Quiver q({"v"}, {{"x", "v", "v"}});
    RelationElement xx;
    xx.terms.push_back({Rational(1), {0, 0}});
    return BoundQuiverAlgebra::build(q, {xx});
}

AlgebraPtr cyclic_nakayama3() {
    Quiver q({"1", "2", "3"}, {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "1"}});
    std::vector<RelationElement> rels;
    for (int i = 0; i < 3; ++i) {
        RelationElement r;
        r.terms.push_back({Rational(1), {i, (i + 1) % 3}});
        rels.push_back(r);
    }
    return BoundQuiverAlgebra::build(q, rels);
}

AlgebraPtr tri3() {
    Quiver q({"1", "2", "3"}, {{"b2", "2", "1"}, {"b3", "3", "2"}});
    return BoundQuiverAlgebra::build(q, {});
}

AlgebraPtr semisimple2() {
    Quiver q({"1", "2"}, {});
    return BoundQuiverAlgebra::build(q, {});
}

} // namespace

TEST_CASE("nakayama sends projectives to the matching injectives") {
    for (const auto& a : {sl2_block(), dual_numbers(), tri3(), semisimple2(), cyclic_nakayama3()}) {
        for (size_t v = 0; v < a->quiver().num_vertices(); ++v) {
            Representation h = nakayama(projective_module(a, static_cast<int>(v)));
            CHECK(module_iso(h, injective_module(a, static_cast<int>(v))));
        }
    }
}

TEST_CASE("nakayama on the regular module of a symmetric algebra") {
    auto d = dual_numbers();
    Representation reg = regular_module(d);
    CHECK(module_iso(nakayama(reg), reg));
}

TEST_CASE("nakayama table is functorial") {
    CHECK(table_is_functorial(nakayama_table(sl2_block())));
    CHECK(table_is_functorial(identity_table(sl2_block())));
}

TEST_CASE("traces and cotraces relative to the projective-injective of sl2") {
    auto a = sl2_block();
    std::vector<int> q{1}; // P(2)
    Representation p1 = projective_module(a, 0);
    Representation lower = m_lower_q(q, p1);
    CHECK(lower.total_dim() == 1);
    CHECK(lower.dim_at(1) == 1);
    Representation i1 = injective_module(a, 0);
    Representation upper = m_upper_q(q, i1);
    CHECK(upper.total_dim() == 1);
    CHECK(upper.dim_at(1) == 1);
    // M = Q: both constructions give Q back
    Representation p2 = projective_module(a, 1);
    CHECK(module_iso(m_lower_q(q, p2), p2));
    CHECK(module_iso(m_upper_q(q, p2), p2));
}

TEST_CASE("hom dimensions through cotrace and trace") {
    auto a = sl2_block();
    std::vector<int> q{1};
    Representation qmod = projective_module(a, 1);
    std::vector<Representation> corpus{projective_module(a, 0), projective_module(a, 1), injective_module(a, 0),
                                       simple_module(a, 0), simple_module(a, 1)};
    for (const auto& m : corpus) {
        // upper preserves Q-homs
        CHECK(hom_basis(qmod, m_upper_q(q, m)).size() == hom_basis(qmod, m).size());
        // quotient by the trace kills Q-homs
        Representation quot = quotient_module(m, trace_of_projectives(q, m)).rep;
        CHECK(hom_basis(qmod, quot).empty());
    }
}

TEST_CASE("coapproximation on the sl2 block") {
    auto a = sl2_block();
    std::vector<int> q{1};
    Representation p1 = projective_module(a, 0);
    Representation c1 = coapp(q, p1);
    CHECK(c1.total_dim() == 1); // P(1)_Q is the socle
    Representation c2 = coapp(q, c1);
    CHECK(c2.total_dim() == 2);
    CHECK(module_iso(c2, injective_module(a, 0)));
    // projective-injective summands are fixed
    Representation p2 = projective_module(a, 1);
    CHECK(module_iso(coapp(q, p2), p2));
    // zero module stays zero
    CHECK(coapp(q, Representation::zero(a)).total_dim() == 0);
}

TEST_CASE("approximation is dual to coapproximation") {
    auto a = sl2_block();
    std::vector<int> q{1};
    Representation i1 = injective_module(a, 0);
    Representation ap = approx(q, approx(q, i1));
    CHECK(module_iso(ap, projective_module(a, 0)));
    Representation p2 = projective_module(a, 1);
    CHECK(module_iso(approx(q, p2), p2));
}

TEST_CASE("adjunction dimensions between coapp and approx") {
    auto a = sl2_block();
    std::vector<int> q{1};
    std::vector<Representation> corpus{projective_module(a, 0), projective_module(a, 1), simple_module(a, 0),
                                       simple_module(a, 1), injective_module(a, 0)};
    for (const auto& m : corpus)
        for (const auto& n : corpus)
            CHECK(hom_basis(coapp(q, m), n).size() == hom_basis(m, approx(q, n)).size());
}

TEST_CASE("coapp preserves Q-hom dimensions") {
    auto a = sl2_block();
    std::vector<int> q{1};
    Representation qmod = projective_module(a, 1);
    std::vector<Representation> corpus{projective_module(a, 0), projective_module(a, 1), simple_module(a, 0),
                                       simple_module(a, 1), injective_module(a, 0)};
    for (const auto& m : corpus) CHECK(hom_basis(qmod, coapp(q, m)).size() == hom_basis(qmod, m).size());
}

TEST_CASE("projective-injective labels and goodness") {
    auto a = sl2_block();
    CHECK(projective_injective_labels(a) == std::vector<int>{1});
    CHECK(is_good(a, {1}));
    auto nak = cyclic_nakayama3();
    CHECK(projective_injective_labels(nak) == std::vector<int>{0, 1, 2});
    // a single projective of the cyclic Nakayama algebra is not good: its
    // socle sits at the next vertex
    CHECK_FALSE(is_good(nak, {0}));
    CHECK(is_good(nak, {0, 1, 2}));
    CHECK_THROWS_AS((void)is_good(a, {0}), Error);
}

TEST_CASE("double centraliser on the sl2 block") {
    auto a = sl2_block();
    DoubleCentraliserReport r = check_double_centraliser(a, std::vector<int>{1});
    CHECK(r.holds);
    CHECK(r.commutant_dim == 5);
    CHECK(r.action_faithful);
    CHECK(r.injective_copresentation);
}

TEST_CASE("double centraliser fails for tri3 with Q the projective-injective") {
    auto a = tri3();
    auto pi = projective_injective_labels(a);
    CHECK(pi == std::vector<int>{2}); // P(3) = I(1)
    DoubleCentraliserReport r = check_double_centraliser(a, pi);
    CHECK_FALSE(r.holds);
}

TEST_CASE("semisimple double centraliser with Q = A") {
    auto a = semisimple2();
    DoubleCentraliserReport r = check_double_centraliser(a, std::vector<int>{0, 1});
    CHECK(r.holds);
    CHECK(r.injective_copresentation);
}

TEST_CASE("serre characterisation theorem on the sl2 block") {
    auto a = sl2_block();
    // the Nakayama functor satisfies its own characterisation
    SerreCharacterisationReport rh = check_theorem_serre_characterisation(a, nakayama_table(a));
    CHECK(rh.preconditions_ok);
    CHECK(rh.cond_a);
    CHECK(rh.cond_b);
    CHECK(rh.cond_c);
    // coapp^2 passes as well
    SerreCharacterisationReport rc = check_theorem_serre_characterisation(a, coapp_square_table(a, {1}));
    CHECK(rc.all());
    // the identity functor fails (b): P(1) is not injective
    SerreCharacterisationReport ri = check_theorem_serre_characterisation(a, identity_table(a));
    CHECK(ri.preconditions_ok);
    CHECK_FALSE(ri.cond_b);
}

TEST_CASE("serre characterisation preconditions fail for tri3") {
    auto a = tri3();
    SerreCharacterisationReport r = check_theorem_serre_characterisation(a, nakayama_table(a));
    CHECK_FALSE(r.preconditions_ok);
    CHECK(!r.precondition_failure.empty());
}

TEST_CASE("serrecoapprox equivalence on the sl2 block") {
    auto a = sl2_block();
    SerrecoapproxReport r = check_serrecoapprox_equivalence(a, {1});
    CHECK(r.preconditions_ok);
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK(r.cond_iii);
    CHECK(r.all_equal);
}

TEST_CASE("serrecoapprox equivalence on a semisimple algebra") {
    auto a = semisimple2();
    SerrecoapproxReport r = check_serrecoapprox_equivalence(a, {0, 1});
    CHECK(r.preconditions_ok);
    CHECK(r.cond_i);
    CHECK(r.cond_ii);
    CHECK(r.cond_iii);
    CHECK(r.all_equal);
}

TEST_CASE("lemma essential on the sl2 block") {
    auto a = sl2_block();
    EssentialLemmaReport r = lemma_essential_check(a, {1}, 0);
    CHECK(r.hypothesis);
    CHECK(r.conclusion_tested);
    CHECK(r.conclusion);
    // on the projective-injective itself the lemma is trivial
    EssentialLemmaReport r2 = lemma_essential_check(a, {1}, 1);
    CHECK(r2.hypothesis);
    CHECK(r2.conclusion);
}

TEST_CASE("centre comparison on the sl2 block") {
    auto a = sl2_block();
    CentreComparison c = centre_comparison(a, {1});
    CHECK(c.centre_dim == 2);
    CHECK(c.endo_centre_dim == 2);
    CHECK(c.restriction_injective);
    CHECK(c.equal());
    // without the double centraliser the comparison refuses to answer
    CHECK_THROWS_AS((void)centre_comparison(tri3(), projective_injective_labels(tri3())), Error);
}

TEST_CASE("centre comparison on a semisimple algebra with Q = A") {
    auto a = semisimple2();
    CentreComparison c = centre_comparison(a, {0, 1});
    CHECK(c.centre_dim == 2);
    CHECK(c.endo_centre_dim == 2);
    CHECK(c.equal());
}

TEST_CASE("lperfect fixture: dual numbers vs the cyclic nakayama algebra") {
    // symmetric side: H is naturally isomorphic to the identity on projectives
    auto d = dual_numbers();
    CHECK(is_selfinjective(d));
    CHECK(is_symmetric(d));
    std::vector<int> all{0};
    CHECK(natural_isomorphism(nakayama_table(d), identity_table(d), all).has_value());
    // non-symmetric self-injective side: the natural isomorphism fails
    auto nak = cyclic_nakayama3();
    CHECK(is_selfinjective(nak));
    CHECK_FALSE(is_symmetric(nak));
    std::vector<int> all3{0, 1, 2};
    CHECK_FALSE(natural_isomorphism(nakayama_table(nak), identity_table(nak), all3).has_value());
}

TEST_CASE("good Q implies nakayama preserves the projective-injectives") {
    for (const auto& a : {sl2_block(), dual_numbers(), cyclic_nakayama3()}) {
        auto pi = projective_injective_labels(a);
        if (pi.empty() || !is_good(a, pi)) continue;
        for (int l : pi) {
            Representation h = nakayama(projective_module(a, l));
            bool again_pi = false;
            for (int m : pi)
                if (module_iso(h, projective_module(a, m))) again_pi = true;
            CHECK(again_pi);
        }
    }
}

TEST_CASE("cperfect both directions on the corpus") {
    // symmetric End(Q) iff H restricted to the projective-injectives is the
    // identity
    for (const auto& a : {sl2_block(), dual_numbers(), cyclic_nakayama3(), semisimple2()}) {
        auto pi = projective_injective_labels(a);
        if (pi.empty() || !is_good(a, pi)) continue;
        PresentedAlgebra endq = present_endo_of_projectives(a, pi);
        bool sym = is_symmetric(endq.algebra);
        bool ident = natural_isomorphism(nakayama_table(a), identity_table(a), pi).has_value();
        CHECK(sym == ident);
    }
}

TEST_CASE("serre pairing with naturality on projectives") {
    CHECK(serre_pairing_natural(sl2_block()));
    CHECK(serre_pairing_natural(semisimple2()));
    CHECK(serre_pairing_natural(tri3()));
    CHECK(serre_pairing_natural(dual_numbers()));
}

TEST_CASE("endomorphism ring of the sl2 projective-injective is the dual numbers") {
    auto a = sl2_block();
    PresentedAlgebra endq = present_endo_of_projectives(a, {1});
    CHECK(endq.algebra->dim() == 2);
    CHECK(is_symmetric(endq.algebra));
}
