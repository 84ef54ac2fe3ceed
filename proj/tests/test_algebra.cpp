#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semicurve/algebra.hpp"
#include "test_util.hpp"

using namespace semicurve;

namespace {

SparsePolynomial random_poly(const PolyRingPtr& ring, testutil::Lcg& rng, int nterms) {
    SparsePolynomial p(ring);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(ring->nvars());
        for (auto& x : e) x = static_cast<int>(rng.range(0, 4));
        p.add_term(e, BigInt(rng.range(-9, 9)));
    }
    return p;
}

ToricPoly toric_mul(const ToricPoly& a, const ToricPoly& b) {
    ToricPoly out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            out[da + db] += ca * cb;
            if (out[da + db] == 0) out.erase(da + db);
        }
    return out;
}

}  // namespace

TEST_CASE("polynomial ring axioms on pseudo-random inputs") {
    auto ring = make_x_ring({4, 9, 11});
    testutil::Lcg rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(ring, rng, 5);
        auto q = random_poly(ring, rng, 5);
        auto r = random_poly(ring, rng, 4);
        CHECK((p + q) - q == p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p.scale(3) == p + p + p);
    }
}

TEST_CASE("weighted degrees and homogeneity") {
    auto ring = make_x_ring({4, 9, 11});
    auto f1 = SparsePolynomial::monomial(ring, {5, 0, 0}, 1) -
              SparsePolynomial::monomial(ring, {0, 1, 1}, 1);
    CHECK(f1.is_homogeneous());
    CHECK(f1.weighted_degree() == 20);

    // x1^2 - x0 x2 is inhomogeneous under these weights (18 versus 15).
    auto not_gen = SparsePolynomial::monomial(ring, {0, 2, 0}, 1) -
                   SparsePolynomial::monomial(ring, {1, 0, 1}, 1);
    CHECK_FALSE(not_gen.is_homogeneous());

    auto d0 = f1.partial_derivative(0);
    CHECK(d0 == SparsePolynomial::monomial(ring, {4, 0, 0}, 5));

    auto other = make_x_ring({2, 3});
    CHECK_THROWS_WITH(f1 + SparsePolynomial::variable(other, 0), "incompatible rings");
}

TEST_CASE("toric substitution kills the binomial ideal") {
    auto ring = make_x_ring({4, 9, 11});
    auto f1 = SparsePolynomial::monomial(ring, {5, 0, 0}, 1) -
              SparsePolynomial::monomial(ring, {0, 1, 1}, 1);
    CHECK(toric_substitute(f1).empty());
    auto x0 = SparsePolynomial::variable(ring, 0);
    auto t4 = toric_substitute(x0);
    REQUIRE(t4.size() == 1);
    CHECK(t4.begin()->first == 4);
    CHECK(t4.begin()->second == 1);

    // Ring morphism: substitution commutes with products.
    testutil::Lcg rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poly(ring, rng, 4);
        auto q = random_poly(ring, rng, 4);
        CHECK(toric_substitute(p * q) == toric_mul(toric_substitute(p), toric_substitute(q)));
    }

    // Random combinations of ideal generators vanish.
    auto f2 = SparsePolynomial::monomial(ring, {1, 2, 0}, 1) -
              SparsePolynomial::monomial(ring, {0, 0, 2}, 1);
    auto f3 = SparsePolynomial::monomial(ring, {4, 0, 1}, 1) -
              SparsePolynomial::monomial(ring, {0, 3, 0}, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto c1 = random_poly(ring, rng, 3);
        auto c2 = random_poly(ring, rng, 3);
        auto c3 = random_poly(ring, rng, 3);
        CHECK(toric_substitute(c1 * f1 + c2 * f2 + c3 * f3).empty());
    }
}

TEST_CASE("rational_rank: literal matrices") {
    CHECK(rational_rank(RationalMatrix::from_int_rows({{5, -1, -1}, {1, 2, -2}, {4, -3, 1}})) == 2);

    auto eye = RationalMatrix::from_int_rows(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(rational_rank(eye) == 4);
    CHECK(nullspace_basis(eye).empty());

    // The nine rows of the degree-(-12) system of the genus-16 curve.
    auto a = RationalMatrix::from_int_rows({
        {0, 1, -1, -1, 1, 0, 0, 0, 0},
        {1, -1, 0, 0, -1, 1, 0, 0, 0},
        {0, 0, 1, -1, -1, 1, 0, 0, 0},
        {1, 0, -1, 0, 0, -1, 1, 0, 0},
        {0, 1, 0, -1, 0, 0, -1, 1, 0},
        {0, 0, 0, 1, 0, -2, 1, 0, 0},
        {1, -1, 0, 0, 0, 0, 0, -1, 1},
        {0, 1, -1, 0, 0, 0, 0, -1, 1},
        {0, 0, 1, 0, -1, 0, -1, 1, 0},
    });
    CHECK(rational_rank(a) == 7);
}

TEST_CASE("rank and nullspace: dimension identity on random matrices") {
    testutil::Lcg rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        size_t R = static_cast<size_t>(rng.range(1, 6));
        size_t C = static_cast<size_t>(rng.range(1, 6));
        RationalMatrix m(R, C);
        for (size_t i = 0; i < R; ++i)
            for (size_t j = 0; j < C; ++j)
                m.at(i, j) = BigRat(rng.range(-6, 6), rng.range(1, 4));
        auto basis = nullspace_basis(m);
        CHECK(rational_rank(m) + static_cast<long long>(basis.size()) ==
              static_cast<long long>(C));
        // Basis vectors are genuine kernel vectors, primitive, leading +.
        for (const auto& v : basis) {
            for (size_t i = 0; i < R; ++i) {
                BigRat acc = 0;
                for (size_t j = 0; j < C; ++j) acc += m.at(i, j) * BigRat(v[j]);
                CHECK(acc == 0);
            }
            BigInt content = 0;
            for (const auto& x : v) content = gcd(content, x);
            CHECK(content == 1);
            for (const auto& x : v) {
                if (x == 0) continue;
                CHECK(x > 0);
                break;
            }
        }
    }
}

TEST_CASE("nullspace with a pinned coordinate reproduces the worked vector") {
    // The three quadric rows of an arithmetic 4-space curve plus the row
    // pinning the first coordinate.
    auto m = RationalMatrix::from_int_rows({
        {-1, 2, -1, 0},
        {-1, 1, 1, -1},
        {0, -1, 2, -1},
        {1, 0, 0, 0},
    });
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<BigInt>{0, 1, 2, 3});
}

TEST_CASE("substitute_variables merges and kills variables") {
    auto src = std::make_shared<PolyRing>(std::vector<std::string>{"x", "U", "V"},
                                          std::vector<long long>{2, 5, 5});
    auto dst = std::make_shared<PolyRing>(std::vector<std::string>{"x", "W"},
                                          std::vector<long long>{2, 5});
    SparsePolynomial p(src);
    p.add_term({1, 1, 0}, 2);   // 2 x U
    p.add_term({0, 0, 2}, 1);   // V^2
    p.add_term({3, 1, 1}, 4);   // 4 x^3 U V
    auto q = p.substitute_variables(dst, {{0, 1}, {1, 1}, {1, -1}});  // U -> W, V -> -W
    SparsePolynomial expect(dst);
    expect.add_term({1, 1}, 2);
    expect.add_term({0, 2}, 1);
    expect.add_term({3, 2}, -4);
    CHECK(q == expect);
    auto killed = p.substitute_variables(dst, {{0, 1}, {1, 1}, {0, 0}});  // V -> 0
    SparsePolynomial expect2(dst);
    expect2.add_term({1, 1}, 2);
    CHECK(killed == expect2);
}
