#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/algebra.hpp"

using namespace qh;

namespace {

AlgebraPtr point() { return BoundQuiverAlgebra::build(Quiver({"v"}, {}), {}); }

AlgebraPtr dual_numbers() {
    Quiver q({"v"}, {{"x", "v", "v"}});
    RelationElement xx;
    xx.terms.push_back({Rational(1), {0, 0}});
    return BoundQuiverAlgebra::build(q, {xx});
}

AlgebraPtr sl2_block() {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    RelationElement ab;
    ab.terms.push_back({Rational(1), {0, 1}}); // a then b, the 1->2->1 path
    return BoundQuiverAlgebra::build(q, {ab});
}

} // namespace

TEST_CASE("one vertex no arrows gives the ground field") {
    auto a = point();
    CHECK(a->dim() == 1);
    CHECK(a->loewy_length() == 1);
}

TEST_CASE("dual numbers") {
    auto a = dual_numbers();
    CHECK(a->dim() == 2);
    // e, x with x^2 = 0
    CHECK(a->basis_path(0).arrows.empty());
    CHECK(a->basis_path(1).arrows.size() == 1);
    auto x = a->zero_elem();
    x[1] = Rational(1);
    CHECK(a->multiply(x, x) == a->zero_elem());
}

TEST_CASE("sl2 block quiver algebra") {
    auto a = sl2_block();
    CHECK(a->dim() == 5);
    // basis: e1, e2, a, b, ba
    std::vector<size_t> lens;
    for (const auto& b : a->basis()) lens.push_back(b.length());
    CHECK(lens == std::vector<size_t>{0, 0, 1, 1, 2});
    const auto& ba = a->basis_path(4);
    CHECK(ba.source == 1);
    CHECK(ba.target == 1);
    // a.b = 0 and b.a = ba
    int ia = a->arrow_basis_index(0), ib = a->arrow_basis_index(1);
    CHECK(a->product(ia, ib).empty());
    REQUIRE(a->product(ib, ia).size() == 1);
    CHECK(a->product(ib, ia)[0].first == 4);
}

TEST_CASE("radical powers") {
    auto a = sl2_block();
    CHECK(a->radical_power(0).dim() == 5);
    CHECK(a->radical_power(1).dim() == 3);
    CHECK(a->radical_power(2).dim() == 1);
    CHECK(a->radical_power(3).dim() == 0);
    auto d = dual_numbers();
    CHECK(d->radical_power(1).dim() == 1);
}

TEST_CASE("radical power products nest") {
    auto a = sl2_block();
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            auto rk = a->radical_power(k), rl = a->radical_power(l), rkl = a->radical_power(k + l);
            // product of any two basis vectors of rad^k, rad^l lands in rad^(k+l)
            for (size_t i = 0; i < rk.dim(); ++i)
                for (size_t j = 0; j < rl.dim(); ++j) {
                    BoundQuiverAlgebra::Elem x(a->dim()), y(a->dim());
                    for (size_t c = 0; c < a->dim(); ++c) {
                        x[c] = rk.basis().at(i, c);
                        y[c] = rl.basis().at(j, c);
                    }
                    auto prod = a->multiply(x, y);
                    Matrix col(a->dim(), 1);
                    for (size_t c = 0; c < a->dim(); ++c) col.at(c, 0) = prod[c];
                    CHECK(rkl.contains_vector(col));
                }
        }
}

TEST_CASE("opposite is an involution on the serialized presentation") {
    auto a = sl2_block();
    auto opp = a->opposite();
    CHECK(opp->dim() == 5);
    // arrows reversed
    CHECK(opp->quiver().arrow_data(0).source == 1);
    CHECK(opp->quiver().arrow_data(0).target == 0);
    auto back = opp->opposite();
    CHECK(*back == *a);

    auto p = point();
    CHECK(*p->opposite() == *p);
}

TEST_CASE("opposite of sl2 block has the reversed relation") {
    auto a = sl2_block();
    auto opp = a->opposite();
    // relation becomes b'.a' read in reversed arrows: same arrow names
    REQUIRE(opp->relations().size() == 1);
    const auto& t = opp->relations()[0].terms[0];
    CHECK(t.arrows == std::vector<int>{1, 0});
}

TEST_CASE("non-admissible ideal is rejected") {
    Quiver q({"v"}, {{"x", "v", "v"}});
    CHECK_THROWS_AS((void)BoundQuiverAlgebra::build(q, {}, 5), Error);
}

TEST_CASE("malformed relations are rejected") {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    RelationElement mixed;
    mixed.terms.push_back({Rational(1), {0, 1}}); // 1 -> 1
    mixed.terms.push_back({Rational(1), {1, 0}}); // 2 -> 2
    CHECK_THROWS_AS((void)BoundQuiverAlgebra::build(q, {mixed}), Error);

    RelationElement tooshort;
    tooshort.terms.push_back({Rational(1), {0}});
    CHECK_THROWS_AS((void)BoundQuiverAlgebra::build(q, {tooshort}), Error);
}

TEST_CASE("dual extension of a point and of A2") {
    Quiver pt({"1"}, {});
    auto d1 = dual_extension(pt);
    CHECK(d1->dim() == 1);

    Quiver a2({"1", "2"}, {{"al", "2", "1"}});
    auto d = dual_extension(a2);
    // basis: e1, e2, al, al*, al*.al (the 1->2->1 route vanishes)
    CHECK(d->dim() == 5);
    CHECK(d->quiver().num_arrows() == 2);
    // forward-then-reversed is the zero route
    int f = d->arrow_basis_index(0), r = d->arrow_basis_index(1);
    CHECK(d->product(f, r).empty());
    CHECK(d->product(r, f).size() == 1);
}

TEST_CASE("dual extension requires a directed quiver") {
    Quiver bad({"1", "2"}, {{"up", "1", "2"}});
    CHECK_THROWS_AS((void)dual_extension(bad), Error);
}

TEST_CASE("dual extension of the A3 chain") {
    Quiver a3({"1", "2", "3"}, {{"b2", "2", "1"}, {"b3", "3", "2"}});
    auto d = dual_extension(a3);
    // hand count of reversed-then-forward normal forms per start vertex:
    // from 1: 6, from 2: 5, from 3: 3
    CHECK(d->dim() == 14);
}
