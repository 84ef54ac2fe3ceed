#include "semicurve/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semicurve {

namespace {

SparsePolynomial mono(const PolyRingPtr& ring,
                      std::initializer_list<std::pair<int, int>> factors,
                      long long coeff = 1) {
    std::vector<int> e(ring->nvars(), 0);
    for (auto [v, p] : factors) e[static_cast<size_t>(v)] += p;
    return SparsePolynomial::monomial(ring, std::move(e), coeff);
}

void verify_presentation(const CurvePresentation& p) {
    for (size_t j = 0; j < p.gens.size(); ++j) {
        if (!p.gens[j].is_homogeneous())
            throw std::logic_error("presentation generator not homogeneous");
        if (!toric_substitute(p.gens[j]).empty())
            throw std::logic_error("presentation generator does not vanish on the curve");
        if (p.gens[j].weighted_degree() != p.degrees[j])
            throw std::logic_error("presentation degree mismatch");
    }
    if (!p.relations.empty()) {
        for (const auto& res : mat_vec(p.relations, p.gens))
            if (!res.is_zero()) throw std::logic_error("relation identity r*f = 0 failed");
    }
}

}  // namespace

StructureConstants3 structure_constants_3(const NumericalSemigroup& S) {
    const auto& n = S.min_generators();
    if (n.size() != 3) throw std::invalid_argument("wrong shape");
    const long long n0 = n[0], n1 = n[1], n2 = n[2];

    // Decompositions value = lambda*n0 + w*n2 (or mu*n0 + z*n1).
    auto decomps = [](long long value, long long A, long long B) {
        std::vector<std::pair<long long, long long>> out;  // (coeff of A, coeff of B)
        for (long long b = 0; b * B <= value; ++b)
            if ((value - b * B) % A == 0) out.push_back({(value - b * B) / A, b});
        return out;
    };

    StructureConstants3 sc;
    for (long long k = 1;; ++k) {
        auto ds = decomps(k * n1, n0, n2);
        if (ds.empty() || !S.contains(k * n1 - n0)) continue;
        // Prefer a decomposition with both parts positive, smallest w.
        std::optional<std::pair<long long, long long>> best;
        for (auto [lam, w] : ds)
            if (lam >= 1 && w >= 1 && (!best || w < best->second)) best = {lam, w};
        if (!best)
            for (auto [lam, w] : ds)
                if (lam >= 1 && (!best || w < best->second)) best = {lam, w};
        if (!best) throw std::logic_error("u*n1 has no decomposition with lambda >= 1");
        sc.u = k;
        sc.lambda = best->first;
        sc.w = best->second;
        break;
    }
    for (long long k = 1;; ++k) {
        auto ds = decomps(k * n2, n0, n1);
        std::optional<std::pair<long long, long long>> best;
        for (auto [m, z] : ds)
            if (z < sc.u && m >= 1 && z >= 1 && (!best || z < best->second)) best = {m, z};
        if (!best)
            for (auto [m, z] : ds)
                if (z < sc.u && (!best || z < best->second)) best = {m, z};
        if (!best) {
            if (!ds.empty()) throw std::logic_error("v*n2 has no decomposition with z < u");
            continue;
        }
        sc.v = k;
        sc.mu = best->first;
        sc.z = best->second;
        break;
    }
    if ((sc.lambda + sc.mu) * n0 != (sc.u - sc.z) * n1 + (sc.v - sc.w) * n2)
        throw std::logic_error("structure-constant consistency identity failed");
    sc.complete_intersection = (sc.z * sc.w * sc.mu == 0);
    return sc;
}

CurvePresentation presentation_3(const NumericalSemigroup& S) {
    StructureConstants3 sc = structure_constants_3(S);
    if (sc.complete_intersection)
        throw std::invalid_argument(
            "complete intersection: presentation has 2 generators, out of deformation scope");
    const auto& n = S.min_generators();
    PolyRingPtr ring = make_x_ring(n);

    // Canonical construction order: f_PS = (x1^u - x0^l x2^w,
    // x1^{u-z} x2^{v-w} - x0^{l+m}, x2^v - x0^m x1^z).  The presentation
    // stores -f_PS, which puts the x0-carrying monomial first, sorted by
    // weighted degree.
    const int u = static_cast<int>(sc.u), v = static_cast<int>(sc.v);
    const int lam = static_cast<int>(sc.lambda), muc = static_cast<int>(sc.mu);
    const int w = static_cast<int>(sc.w), z = static_cast<int>(sc.z);
    std::vector<SparsePolynomial> f_ps = {
        mono(ring, {{1, u}}) - mono(ring, {{0, lam}, {2, w}}),
        mono(ring, {{1, u - z}, {2, v - w}}) - mono(ring, {{0, lam + muc}}),
        mono(ring, {{2, v}}) - mono(ring, {{0, muc}, {1, z}}),
    };
    std::vector<int> order = {1, 2, 0};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return f_ps[a].weighted_degree() < f_ps[b].weighted_degree();
    });

    CurvePresentation p;
    p.S = S;
    p.ring = ring;
    p.kind = PresentationKind::Embdim3;
    p.sc3 = sc;
    p.ps_order = order;
    for (int idx : order) {
        p.gens.push_back(-f_ps[idx]);
        p.degrees.push_back(f_ps[idx].weighted_degree());
    }
    PolyMatrix r_ps = {
        {-mono(ring, {{2, v - w}}), mono(ring, {{1, z}}), -mono(ring, {{0, lam}})},
        {mono(ring, {{0, muc}}), -mono(ring, {{2, w}}), mono(ring, {{1, u - z}})},
    };
    // r_pres[m][i] = r_ps[swap(m)][order[i]] keeps r*f = 0 after the sign
    // flip and the sort.
    p.relations.resize(2);
    for (int m = 0; m < 2; ++m)
        for (int i = 0; i < 3; ++i)
            p.relations[static_cast<size_t>(m)].push_back(r_ps[static_cast<size_t>(1 - m)][static_cast<size_t>(order[static_cast<size_t>(i)])]);
    verify_presentation(p);
    return p;
}

namespace {

Arith4Data arith_data(const NumericalSemigroup& S, long long p_len) {
    const auto& n = S.min_generators();
    Arith4Data ad;
    ad.d = n[1] - n[0];
    for (size_t i = 1; i < n.size(); ++i)
        if (n[i] - n[i - 1] != ad.d) throw std::invalid_argument("out of scope");
    ad.a = n[0] / (p_len + 1);
    ad.b = n[0] % (p_len + 1);
    if (ad.a < 1) throw std::invalid_argument("out of scope");

    // v = min{k : k*n_{p+1} in <n_0..n_p>}; for b >= 1 the closed forms
    // are v = a+1, mu = a+d, z = p+1-b.  The closed form is cross-checked
    // against the direct search and any disagreement is reported.
    std::vector<long long> lower(n.begin(), n.end() - 1);
    NumericalSemigroup sub = NumericalSemigroup::from_generators(lower);
    long long v_search = 0;
    for (long long k = 1;; ++k)
        if (sub.contains(k * n.back())) { v_search = k; break; }
    if (ad.b >= 1) {
        ad.v = ad.a + 1;
        ad.mu = ad.a + ad.d;
        ad.z = p_len + 1 - ad.b;
        if (v_search != ad.v)
            throw std::logic_error("arithmetic v formula disagrees with minimality search");
        // v*n_{p+1} = mu*n_0 + n_z with z = p+1-b in [1, p].
        if (ad.z < 1 || ad.z > p_len ||
            ad.v * n.back() != ad.mu * n[0] + n[static_cast<size_t>(ad.z)])
            throw std::logic_error("arithmetic mu/z identity failed");
    } else {
        ad.v = v_search;
        ad.z = 0;
        if ((ad.v * n.back()) % n[0] != 0)
            throw std::logic_error("b = 0 but v*n_{p+1} is not a multiple of n_0");
        ad.mu = ad.v * n.back() / n[0];
    }
    return ad;
}

}  // namespace

std::vector<SparsePolynomial> arithmetic_ideal_generators(const NumericalSemigroup& S) {
    const auto& n = S.min_generators();
    if (n.size() < 3) throw std::invalid_argument("out of scope");
    const long long p = static_cast<long long>(n.size()) - 2;
    Arith4Data ad = arith_data(S, p);
    PolyRingPtr ring = make_x_ring(n);
    const int P = static_cast<int>(p);
    const int v = static_cast<int>(ad.v), mu = static_cast<int>(ad.mu);
    const int b = static_cast<int>(ad.b);

    std::vector<SparsePolynomial> gens;
    for (int i = 1; i <= P; ++i)
        for (int j = i; j <= P; ++j) {
            if (i + j <= P)
                gens.push_back(mono(ring, {{i, 1}, {j, 1}}) - mono(ring, {{0, 1}, {i + j, 1}}));
            else if (j <= P - 1)
                gens.push_back(mono(ring, {{i, 1}, {j, 1}}) - mono(ring, {{i + j - P, 1}, {P, 1}}));
        }
    for (int i = 0; i <= P - 1; ++i)
        gens.push_back(mono(ring, {{1 + i, 1}, {P, 1}}) - mono(ring, {{i, 1}, {P + 1, 1}}));
    if (b >= 1) {
        for (int j = 0; j <= P - b; ++j)
            gens.push_back(mono(ring, {{b + j, 1}, {P + 1, v - 1}}) - mono(ring, {{0, mu}, {j, 1}}));
        gens.push_back(mono(ring, {{P + 1, v}}) - mono(ring, {{0, mu}, {P + 1 - b, 1}}));
    } else {
        gens.push_back(mono(ring, {{P + 1, v}}) - mono(ring, {{0, mu}}));
    }
    for (const auto& g : gens) {
        if (!g.is_homogeneous() || !toric_substitute(g).empty())
            throw std::logic_error("arithmetic generator fails the toric test");
    }
    return gens;
}

CurvePresentation presentation_4_arithmetic(const NumericalSemigroup& S) {
    const auto& n = S.min_generators();
    if (n.size() != 4) throw std::invalid_argument("out of scope");
    Arith4Data ad = arith_data(S, 2);

    CurvePresentation p;
    p.S = S;
    p.ring = make_x_ring(n);
    p.kind = PresentationKind::Arith4;
    p.arith4 = ad;
    p.gens = arithmetic_ideal_generators(S);
    for (const auto& g : p.gens) p.degrees.push_back(g.weighted_degree());

    const auto& ring = p.ring;
    const int v = static_cast<int>(ad.v), mu = static_cast<int>(ad.mu);
    auto Z = [&] { return SparsePolynomial(ring); };
    auto X = [&](int i, int pow = 1) { return mono(ring, {{i, pow}}); };

    if (ad.b == 0) {
        // f = (x1^2-x0x2, x1x2-x0x3, x2^2-x1x3, x3^v-x0^mu)
        SparsePolynomial mf4 = X(0, mu) - X(3, v);  // = -f4
        p.relations = {
            {X(2), -X(1), X(0), Z()},
            {-X(3), X(2), -X(1), Z()},
            {mf4, Z(), Z(), p.gens[0]},
            {Z(), mf4, Z(), p.gens[1]},
            {Z(), Z(), mf4, p.gens[2]},
        };
    } else if (ad.b == 1) {
        // f = (xi11, phi0, phi1, psi0, psi1, theta)
        p.relations = {
            {X(2), -X(1), X(0), Z(), Z(), Z()},
            {-X(3), X(2), -X(1), Z(), Z(), Z()},
            {X(3, v - 1), Z(), Z(), -X(1), X(0), Z()},
            {Z(), X(3, v - 1), Z(), -X(2), Z(), X(0)},
            {X(0, mu), -X(3, v - 1), Z(), Z(), X(1), -X(0)},
            {Z(), X(0, mu), -X(3, v - 1), -X(3), X(2), Z()},
            {Z(), Z(), -X(3, v - 1), Z(), X(2), -X(1)},
            {Z(), Z(), X(0, mu), Z(), -X(3), X(2)},
        };
    } else {
        // f = (xi11, phi0, phi1, psi0, theta)
        p.relations = {
            {X(2), -X(1), X(0), Z(), Z()},
            {-X(3), X(2), -X(1), Z(), Z()},
            {Z(), X(3, v - 1), Z(), -X(1), X(0)},
            {X(0, mu), Z(), X(3, v - 1), -X(2), X(1)},
            {Z(), X(0, mu), Z(), -X(3), X(2)},
        };
    }
    verify_presentation(p);
    return p;
}

CurvePresentation presentation_buchweitz() {
    NumericalSemigroup S =
        NumericalSemigroup::from_generators({13, 14, 15, 16, 17, 18, 20, 22, 23});
    PolyRingPtr ring = make_x_ring(S.min_generators());
    auto bin = [&](std::initializer_list<std::pair<int, int>> neg,
                   std::initializer_list<std::pair<int, int>> pos) {
        return mono(ring, pos) - mono(ring, neg);
    };
    // The 32 equations, reading the published grid left to right.
    std::vector<SparsePolynomial> grid = {
        bin({{1, 2}}, {{0, 1}, {2, 1}}),          // -x1^2 + x0x2
        bin({{2, 2}}, {{1, 1}, {3, 1}}),          // -x2^2 + x1x3
        bin({{1, 1}, {2, 1}}, {{0, 1}, {3, 1}}),  // -x1x2 + x0x3
        bin({{3, 2}}, {{2, 1}, {4, 1}}),          // -x3^2 + x2x4
        bin({{2, 1}, {3, 1}}, {{1, 1}, {4, 1}}),  // -x2x3 + x1x4
        bin({{1, 1}, {3, 1}}, {{0, 1}, {4, 1}}),  // -x1x3 + x0x4
        bin({{4, 2}}, {{3, 1}, {5, 1}}),          // -x4^2 + x3x5
        bin({{3, 1}, {4, 1}}, {{2, 1}, {5, 1}}),  // -x3x4 + x2x5
        bin({{2, 1}, {4, 1}}, {{1, 1}, {5, 1}}),  // -x2x4 + x1x5
        bin({{1, 1}, {4, 1}}, {{0, 1}, {5, 1}}),  // -x1x4 + x0x5
        bin({{5, 2}}, {{3, 1}, {6, 1}}),          // -x5^2 + x3x6
        bin({{4, 1}, {5, 1}}, {{2, 1}, {6, 1}}),  // -x4x5 + x2x6
        bin({{3, 1}, {5, 1}}, {{1, 1}, {6, 1}}),  // -x3x5 + x1x6
        bin({{2, 1}, {5, 1}}, {{0, 1}, {6, 1}}),  // -x2x5 + x0x6
        bin({{6, 2}}, {{0, 2}, {1, 1}}),          // x0^2x1 - x6^2
        bin({{0, 2}, {3, 1}}, {{6, 1}, {7, 1}}),  // -x0^2x3 + x6x7
        bin({{6, 2}}, {{5, 1}, {7, 1}}),          // -x6^2 + x5x7
        bin({{0, 3}}, {{4, 1}, {7, 1}}),          // -x0^3 + x4x7
        bin({{5, 1}, {6, 1}}, {{3, 1}, {7, 1}}),  // -x5x6 + x3x7
        bin({{4, 1}, {6, 1}}, {{2, 1}, {7, 1}}),  // -x4x6 + x2x7
        bin({{3, 1}, {6, 1}}, {{1, 1}, {7, 1}}),  // -x3x6 + x1x7
        bin({{2, 1}, {6, 1}}, {{0, 1}, {7, 1}}),  // -x2x6 + x0x7
        bin({{7, 2}}, {{0, 2}, {5, 1}}),          // x0^2x5 - x7^2
        bin({{0, 1}, {1, 1}, {5, 1}}, {{7, 1}, {8, 1}}),  // -x0x1x5 + x7x8
        bin({{0, 2}, {4, 1}}, {{6, 1}, {8, 1}}),  // -x0^2x4 + x6x8
        bin({{0, 2}, {2, 1}}, {{5, 1}, {8, 1}}),  // -x0^2x2 + x5x8
        bin({{5, 1}, {7, 1}}, {{4, 1}, {8, 1}}),  // -x5x7 + x4x8
        bin({{4, 1}, {7, 1}}, {{3, 1}, {8, 1}}),  // -x4x7 + x3x8
        bin({{3, 1}, {7, 1}}, {{2, 1}, {8, 1}}),  // -x3x7 + x2x8
        bin({{2, 1}, {7, 1}}, {{1, 1}, {8, 1}}),  // -x2x7 + x1x8
        bin({{1, 1}, {7, 1}}, {{0, 1}, {8, 1}}),  // -x1x7 + x0x8
        bin({{0, 2}, {6, 1}}, {{8, 2}}),          // -x0^2x6 + x8^2
    };
    std::vector<size_t> order(grid.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return grid[a].weighted_degree() < grid[b].weighted_degree();
    });

    CurvePresentation p;
    p.S = S;
    p.ring = ring;
    p.kind = PresentationKind::Buchweitz;
    for (size_t idx : order) {
        p.gens.push_back(grid[idx]);
        p.degrees.push_back(grid[idx].weighted_degree());
    }
    verify_presentation(p);
    return p;
}

JacobianPair jacobian(const CurvePresentation& pres) {
    const size_t q = pres.gens.size();
    const size_t nv = pres.ring->nvars();
    JacobianPair jp;
    jp.row_degrees = pres.degrees;
    jp.J1 = RationalMatrix(q, nv);
    jp.J0.assign(q, {});
    for (size_t j = 0; j < q; ++j) {
        for (size_t i = 0; i < nv; ++i) {
            SparsePolynomial entry =
                SparsePolynomial::variable(pres.ring, i) * pres.gens[j].partial_derivative(i);
            ToricPoly tor = toric_substitute(entry);
            BigInt coeff = 0;
            for (const auto& [deg, c] : tor) {
                if (deg != pres.degrees[j])
                    throw std::logic_error("degree-0 derivative is not homogeneous");
                coeff = c;
            }
            jp.J1.at(j, i) = BigRat(coeff);
            jp.J0[j].push_back(std::move(entry));
        }
        // Euler identity: the weights annihilate every row.
        BigRat acc = 0;
        for (size_t i = 0; i < nv; ++i)
            acc += jp.J1.at(j, i) * BigRat(pres.ring->weight(i));
        if (acc != 0) throw std::logic_error("Euler identity failed on a Jacobian row");
    }
    if (rational_rank(jp.J1) != static_cast<long long>(nv) - 1)
        throw std::logic_error("Jacobian at the smooth point has unexpected rank");
    return jp;
}

}  // namespace semicurve
