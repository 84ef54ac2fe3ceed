#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semicurve/curve.hpp"
#include "test_util.hpp"

using namespace semicurve;

namespace {

SparsePolynomial mono(const PolyRingPtr& ring, std::vector<int> e, long long c = 1) {
    return SparsePolynomial::monomial(ring, std::move(e), c);
}

// Arithmetic 4-generated semigroups grouped by b = n_0 mod 3.
std::map<long long, std::vector<NumericalSemigroup>> arithmetic_panel(size_t per_case) {
    std::map<long long, std::vector<NumericalSemigroup>> panel;
    for (long long n0 = 4; n0 <= 40; ++n0)
        for (long long d = 1; d <= 9; ++d) {
            if (std::gcd(n0, d) != 1) continue;
            std::vector<long long> gens = {n0, n0 + d, n0 + 2 * d, n0 + 3 * d};
            auto S = NumericalSemigroup::from_generators(gens);
            if (S.min_generators() != gens) continue;  // not minimal: skip
            auto& bucket = panel[n0 % 3];
            if (bucket.size() < per_case) bucket.push_back(S);
        }
    return panel;
}

}  // namespace

TEST_CASE("structure_constants_3: the worked triple and the CI split") {
    auto sc = structure_constants_3(NumericalSemigroup::from_generators({4, 9, 11}));
    CHECK(sc.u == 3);
    CHECK(sc.lambda == 4);
    CHECK(sc.w == 1);
    CHECK(sc.v == 2);
    CHECK(sc.mu == 1);
    CHECK(sc.z == 2);
    CHECK_FALSE(sc.complete_intersection);

    CHECK_THROWS_WITH(structure_constants_3(NumericalSemigroup::from_generators({2, 3})),
                      "wrong shape");

    auto ci = structure_constants_3(NumericalSemigroup::from_generators({4, 6, 9}));
    CHECK(ci.complete_intersection);
    CHECK_THROWS_AS(presentation_3(NumericalSemigroup::from_generators({4, 6, 9})),
                    std::invalid_argument);
}

TEST_CASE("structure_constants_3: consistency identity over the catalogue") {
    long long checked = 0;
    enumerate_by_genus(10, [&](const NumericalSemigroup& S) {
        if (S.min_generators().size() != 3) return;
        auto sc = structure_constants_3(S);
        const auto& n = S.min_generators();
        CHECK((sc.lambda + sc.mu) * n[0] == (sc.u - sc.z) * n[1] + (sc.v - sc.w) * n[2]);
        if (!sc.complete_intersection) {
            auto pres = presentation_3(S);  // construction self-verifies
            CHECK(pres.gens.size() == 3);
            CHECK(std::is_sorted(pres.degrees.begin(), pres.degrees.end()));
            ++checked;
        }
    });
    CHECK(checked > 30);
}

TEST_CASE("presentation_3: the embedding-dimension-3 worked example") {
    auto S = NumericalSemigroup::from_generators({4, 9, 11});
    auto pres = presentation_3(S);
    const auto& R = pres.ring;
    REQUIRE(pres.gens.size() == 3);
    CHECK(pres.gens[0] == mono(R, {5, 0, 0}) - mono(R, {0, 1, 1}));   // x0^5 - x1 x2
    CHECK(pres.gens[1] == mono(R, {1, 2, 0}) - mono(R, {0, 0, 2}));   // x0 x1^2 - x2^2
    CHECK(pres.gens[2] == mono(R, {4, 0, 1}) - mono(R, {0, 3, 0}));   // x0^4 x2 - x1^3
    CHECK(pres.degrees == std::vector<long long>{20, 22, 27});

    REQUIRE(pres.relations.size() == 2);
    CHECK(pres.relations[0][0] == -mono(R, {0, 0, 1}));
    CHECK(pres.relations[0][1] == mono(R, {0, 1, 0}));
    CHECK(pres.relations[0][2] == mono(R, {1, 0, 0}));
    CHECK(pres.relations[1][0] == mono(R, {0, 2, 0}));
    CHECK(pres.relations[1][1] == -mono(R, {4, 0, 0}));
    CHECK(pres.relations[1][2] == -mono(R, {0, 0, 1}));

    for (const auto& res : mat_vec(pres.relations, pres.gens)) CHECK(res.is_zero());
}

TEST_CASE("presentation_4_arithmetic: the three shapes") {
    auto b0 = presentation_4_arithmetic(NumericalSemigroup::from_generators({6, 7, 8, 9}));
    REQUIRE(b0.gens.size() == 4);
    CHECK(b0.arith4->b == 0);
    CHECK(b0.arith4->v == 2);
    CHECK(b0.arith4->mu == 3);
    const auto& R0 = b0.ring;
    CHECK(b0.gens[0] == mono(R0, {0, 2, 0, 0}) - mono(R0, {1, 0, 1, 0}));
    CHECK(b0.gens[1] == mono(R0, {0, 1, 1, 0}) - mono(R0, {1, 0, 0, 1}));
    CHECK(b0.gens[2] == mono(R0, {0, 0, 2, 0}) - mono(R0, {0, 1, 0, 1}));
    CHECK(b0.gens[3] == mono(R0, {0, 0, 0, 2}) - mono(R0, {3, 0, 0, 0}));

    auto b1 = presentation_4_arithmetic(NumericalSemigroup::from_generators({7, 10, 13, 16}));
    REQUIRE(b1.gens.size() == 6);
    CHECK(b1.arith4->b == 1);
    CHECK(b1.arith4->v == 3);
    CHECK(b1.arith4->mu == 5);
    CHECK(b1.arith4->z == 2);
    const auto& R1 = b1.ring;
    CHECK(b1.gens[3] == mono(R1, {0, 1, 0, 2}) - mono(R1, {6, 0, 0, 0}));  // x1 x3^2 - x0^6
    CHECK(b1.gens[5] == mono(R1, {0, 0, 0, 3}) - mono(R1, {5, 0, 1, 0}));  // theta

    auto b2 = presentation_4_arithmetic(NumericalSemigroup::from_generators({5, 8, 11, 14}));
    REQUIRE(b2.gens.size() == 5);
    CHECK(b2.arith4->b == 2);
    CHECK(b2.arith4->v == 2);
    CHECK(b2.arith4->mu == 4);
    const auto& R2 = b2.ring;
    CHECK(b2.gens[3] == mono(R2, {0, 0, 1, 1}) - mono(R2, {5, 0, 0, 0}));  // x2 x3 - x0^5
    CHECK(b2.gens[4] == mono(R2, {0, 0, 0, 2}) - mono(R2, {4, 1, 0, 0}));  // x3^2 - x0^4 x1

    CHECK_THROWS_WITH(presentation_4_arithmetic(NumericalSemigroup::from_generators({4, 9, 11})),
                      "out of scope");
}

TEST_CASE("presentation_4_arithmetic: degree multisets across a panel") {
    auto panel = arithmetic_panel(12);
    for (const auto& [b, list] : panel) {
        CHECK(list.size() >= 10);
        for (const auto& S : list) {
            auto pres = presentation_4_arithmetic(S);
            const auto& n = S.min_generators();
            const auto& ad = *pres.arith4;
            std::multiset<long long> expect = {2 * n[1], n[1] + n[2], 2 * n[2]};
            if (ad.b == 1) {
                expect.insert((1 + ad.mu) * n[0]);
                expect.insert(ad.mu * n[0] + n[1]);
                expect.insert(ad.mu * n[0] + n[2]);
            } else if (ad.b == 2) {
                expect.insert((1 + ad.mu) * n[0]);
                expect.insert(ad.mu * n[0] + n[1]);
            } else {
                expect.insert(ad.mu * n[0]);
            }
            CHECK(std::multiset<long long>(pres.degrees.begin(), pres.degrees.end()) == expect);
        }
    }
}

TEST_CASE("arithmetic_ideal_generators: a five-generator instance") {
    // p = 3: <7, 9, 11, 13, 15> is minimally generated, b = 3.
    auto S = NumericalSemigroup::from_generators({7, 9, 11, 13, 15});
    REQUIRE(S.min_generators().size() == 5);
    auto gens = arithmetic_ideal_generators(S);
    // xi: (1,1), (1,2), (2,2); phi: 3; psi: j in [0, p-b] = {0}; theta.
    CHECK(gens.size() == 8);
    for (const auto& g : gens) {
        CHECK(g.is_homogeneous());
        CHECK(toric_substitute(g).empty());
    }
}

TEST_CASE("presentation_buchweitz: the 32-equation fixture") {
    auto pres = presentation_buchweitz();
    REQUIRE(pres.gens.size() == 32);
    CHECK(std::is_sorted(pres.degrees.begin(), pres.degrees.end()));
    CHECK(pres.degrees.front() == 28);
    CHECK(pres.degrees.back() == 46);
    CHECK(std::count(pres.degrees.begin(), pres.degrees.end(), 36) == 3);
    CHECK(std::count(pres.degrees.begin(), pres.degrees.end(), 40) == 3);
    std::vector<long long> expect = {28, 29, 30, 30, 31, 31, 32, 32, 33, 33, 34,
                                     34, 35, 35, 36, 36, 36, 37, 37, 38, 38, 39,
                                     39, 40, 40, 40, 41, 42, 43, 44, 45, 46};
    CHECK(pres.degrees == expect);
    for (const auto& g : pres.gens) {
        CHECK(g.term_count() == 2);
        CHECK(toric_substitute(g).empty());
    }
}

TEST_CASE("jacobian: the 3x3 worked matrix") {
    auto pres = presentation_3(NumericalSemigroup::from_generators({4, 9, 11}));
    auto jp = jacobian(pres);
    const std::vector<std::vector<long long>> expect = {{5, -1, -1}, {1, 2, -2}, {4, -3, 1}};
    for (size_t j = 0; j < 3; ++j)
        for (size_t i = 0; i < 3; ++i) CHECK(jp.J1.at(j, i) == BigRat(expect[j][i]));
    CHECK(jp.row_degrees == std::vector<long long>{20, 22, 27});
    CHECK(rational_rank(jp.J1) == 2);
}

TEST_CASE("jacobian: rank and Euler rows elsewhere") {
    auto bw = jacobian(presentation_buchweitz());
    CHECK(bw.J1.rows() == 32);
    CHECK(bw.J1.cols() == 9);
    CHECK(rational_rank(bw.J1) == 8);

    auto pres = presentation_4_arithmetic(NumericalSemigroup::from_generators({5, 8, 11, 14}));
    auto jp = jacobian(pres);
    for (size_t j = 0; j < jp.J1.rows(); ++j) {
        BigRat acc = 0;
        for (size_t i = 0; i < 4; ++i)
            acc += jp.J1.at(j, i) * BigRat(pres.ring->weight(i));
        CHECK(acc == 0);
    }
}

TEST_CASE("jacobian: degree-0 rows factor through the toric substitution") {
    // J0 = diag(t^{d_j}) J(1) after substituting x_i -> t^{n_i}.
    std::vector<CurvePresentation> ps;
    ps.push_back(presentation_3(NumericalSemigroup::from_generators({4, 9, 11})));
    ps.push_back(presentation_4_arithmetic(NumericalSemigroup::from_generators({5, 8, 11, 14})));
    ps.push_back(presentation_buchweitz());
    for (const auto& pres : ps) {
        auto jp = jacobian(pres);
        for (size_t j = 0; j < pres.gens.size(); ++j)
            for (size_t i = 0; i < pres.ring->nvars(); ++i) {
                ToricPoly tp = toric_substitute(jp.J0[j][i]);
                if (jp.J1.at(j, i) == 0) {
                    CHECK(tp.empty());
                } else {
                    REQUIRE(tp.size() == 1);
                    CHECK(tp.begin()->first == pres.degrees[j]);
                    CHECK(BigRat(tp.begin()->second) == jp.J1.at(j, i));
                }
            }
    }
}

TEST_CASE("buchweitz J(1): spot rows against the published table") {
    auto pres = presentation_buchweitz();
    auto jp = jacobian(pres);
    auto row = [&](size_t j) {
        std::vector<long long> out;
        for (size_t i = 0; i < 9; ++i)
            out.push_back(static_cast<long long>(numerator(jp.J1.at(j, i))));
        return out;
    };
    CHECK(pres.degrees[0] == 28);
    CHECK(row(0) == std::vector<long long>{1, -2, 1, 0, 0, 0, 0, 0, 0});
    CHECK(pres.degrees[1] == 29);
    CHECK(row(1) == std::vector<long long>{1, -1, -1, 1, 0, 0, 0, 0, 0});
    CHECK(pres.degrees[21] == 39);  // -x0^3 + x4 x7
    CHECK(row(21) == std::vector<long long>{-3, 0, 0, 0, 1, 0, 0, 1, 0});
    CHECK(pres.degrees[31] == 46);  // -x0^2 x6 + x8^2
    CHECK(row(31) == std::vector<long long>{-2, 0, 0, 0, 0, 0, -1, 0, 2});
}
