#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/matrix.hpp"
#include "qh/subspace.hpp"

using namespace qh;

namespace {

// Small deterministic generator for property-style checks.
struct Lcg {
    uint64_t state = 0x243f6a8885a308d3ULL;
    uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long long small_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    Matrix matrix(size_t r, size_t c) {
        Matrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = Rational(small_int(-4, 4));
        return m;
    }
};

Matrix from_ints(size_t r, size_t c, std::vector<long long> vals) {
    std::vector<Rational> e;
    for (auto v : vals) e.emplace_back(v);
    return Matrix(r, c, std::move(e));
}

} // namespace

TEST_CASE("bigint arithmetic round trips") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-98765432109876543210");
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
    CHECK((a + b) == BigInt::from_string("123456789012345678901234567890") - BigInt::from_string("98765432109876543210"));
    auto [q, r] = BigInt::divmod(a, BigInt::from_string("1000000007"));
    CHECK((q * BigInt::from_string("1000000007") + r) == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, -4).to_string() == "1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational::from_string("6/3").to_string() == "2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rref pinned examples") {
    auto [r1, p1] = Matrix::identity(2).rref();
    CHECK(r1 == Matrix::identity(2));
    CHECK(p1 == std::vector<size_t>{0, 1});

    auto [r2, p2] = from_ints(2, 2, {2, 4, 1, 2}).rref();
    CHECK(r2 == from_ints(2, 2, {1, 2, 0, 0}));
    CHECK(p2 == std::vector<size_t>{0});

    auto [r3, p3] = Matrix(3, 3).rref();
    CHECK(r3 == Matrix(3, 3));
    CHECK(p3.empty());
}

TEST_CASE("kernel pinned examples") {
    CHECK(Matrix::identity(3).kernel_basis().rows() == 0);
    CHECK(Matrix(2, 3).kernel_basis().rows() == 3);
    Matrix k = from_ints(1, 2, {1, 1}).kernel_basis();
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) == -k.at(0, 1));
}

TEST_CASE("solve pinned examples") {
    Matrix b = from_ints(2, 1, {3, 7});
    auto x = Matrix::identity(2).solve(b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(from_ints(2, 1, {1, 1}).solve(from_ints(2, 1, {1, 2})).has_value());

    auto y = from_ints(1, 1, {2}).solve(from_ints(1, 1, {1}));
    REQUIRE(y);
    CHECK(y->at(0, 0) == Rational(1, 2));
}

TEST_CASE("rref idempotent and rank-nullity over random matrices") {
    Lcg gen;
    for (int t = 0; t < 40; ++t) {
        size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
        Matrix m = gen.matrix(r, c);
        auto [red, piv] = m.rref();
        CHECK(red.rref().first == red);
        CHECK(m.kernel_basis().rows() + piv.size() == c);
        // every kernel row really is killed
        Matrix k = m.kernel_basis();
        for (size_t i = 0; i < k.rows(); ++i) CHECK((m * k.row(i).transpose()).is_zero());
    }
}

TEST_CASE("solve returns exact solutions when consistent") {
    Lcg gen;
    for (int t = 0; t < 30; ++t) {
        Matrix m = gen.matrix(3, 4);
        Matrix x0 = gen.matrix(4, 1);
        Matrix rhs = m * x0;
        auto x = m.solve(rhs);
        REQUIRE(x);
        CHECK(m * *x == rhs);
    }
}

TEST_CASE("subspace lattice") {
    Subspace zero(3);
    Subspace full = Subspace::full(3);
    Matrix rows = from_ints(2, 3, {1, 0, 1, 0, 1, 1});
    Subspace s = Subspace::span_of_rows(rows);
    CHECK((s + zero) == s);
    CHECK(s.intersect(full) == s);
    CHECK(full.contains(s));
    CHECK(s.image_under(Matrix(2, 3)).dim() == 0);
    // canonical form: different spanning sets, same subspace
    Matrix rows2 = from_ints(2, 3, {1, 1, 2, 1, 0, 1});
    CHECK(Subspace::span_of_rows(rows2) == s);
}

TEST_CASE("subspace sum and intersection dimensions") {
    Lcg gen;
    for (int t = 0; t < 25; ++t) {
        Subspace a = Subspace::span_of_rows(gen.matrix(2, 4));
        Subspace b = Subspace::span_of_rows(gen.matrix(2, 4));
        size_t lhs = (a + b).dim() + a.intersect(b).dim();
        CHECK(lhs == a.dim() + b.dim());
        CHECK((a + b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("determinant and inverse") {
    Matrix m = from_ints(2, 2, {1, 2, 3, 4});
    CHECK(m.determinant() == Rational(-2));
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv) == Matrix::identity(2));
    CHECK_FALSE(from_ints(2, 2, {1, 2, 2, 4}).inverse());
}
