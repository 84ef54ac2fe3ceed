#include "semicurve/deform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace semicurve {

namespace {

PolyRingPtr combined_ring(const PolyRingPtr& xring, const std::vector<std::string>& pnames,
                          const std::vector<long long>& pweights) {
    std::vector<std::string> names;
    std::vector<long long> weights;
    for (size_t i = 0; i < xring->nvars(); ++i) {
        names.push_back(xring->name(i));
        weights.push_back(xring->weight(i));
    }
    names.insert(names.end(), pnames.begin(), pnames.end());
    weights.insert(weights.end(), pweights.begin(), pweights.end());
    return std::make_shared<PolyRing>(names, weights);
}

SparsePolynomial lift(const SparsePolynomial& p, const PolyRingPtr& uring) {
    SparsePolynomial out(uring);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> e2(uring->nvars(), 0);
        std::copy(e.begin(), e.end(), e2.begin());
        out.add_term(e2, c);
    }
    return out;
}

SparsePolynomial umono(const PolyRingPtr& uring, size_t nx,
                       std::initializer_list<std::pair<int, int>> xfac, size_t param,
                       long long coeff = 1) {
    std::vector<int> e(uring->nvars(), 0);
    for (auto [v, p] : xfac) e[static_cast<size_t>(v)] += p;
    e[nx + param] += 1;
    return SparsePolynomial::monomial(uring, std::move(e), coeff);
}

PolyMatrix lift_matrix(const PolyMatrix& m, const PolyRingPtr& uring) {
    PolyMatrix out;
    for (const auto& row : m) {
        std::vector<SparsePolynomial> r2;
        for (const auto& e : row) r2.push_back(lift(e, uring));
        out.push_back(std::move(r2));
    }
    return out;
}

PolyMatrix zero_matrix(const PolyRingPtr& ring, size_t rows, size_t cols) {
    return PolyMatrix(rows, std::vector<SparsePolynomial>(cols, SparsePolynomial(ring)));
}

void verify_or_throw(const DeformationFamily& fam) {
    FlatnessReport rep = verify_flatness(fam);
    if (!rep.all_ok())
        throw std::logic_error("deformation family fails its lifting identities: " + rep.failure);
}

}  // namespace

std::vector<SparsePolynomial> DeformationFamily::F() const {
    std::vector<SparsePolynomial> out;
    for (size_t i = 0; i < f.size(); ++i) out.push_back(f[i] + g[i] + h[i]);
    return out;
}

DeformationFamily build_family_3(const NumericalSemigroup& S) {
    CurvePresentation pres = presentation_3(S);
    const StructureConstants3& sc = *pres.sc3;
    const auto& n = S.min_generators();

    DeformationFamily fam;
    fam.base = pres;
    fam.nx = 3;
    fam.param_names = {"U1", "U2", "U3", "U4", "U5", "U6"};
    fam.param_weights = {(sc.v - sc.w) * n[2], sc.mu * n[0], sc.z * n[1],
                         sc.w * n[2],          sc.lambda * n[0], (sc.u - sc.z) * n[1]};
    fam.uring = combined_ring(pres.ring, fam.param_names, fam.param_weights);
    fam.b_case = -1;
    const auto& R = fam.uring;

    const int u = static_cast<int>(sc.u), v = static_cast<int>(sc.v);
    const int lam = static_cast<int>(sc.lambda), mu = static_cast<int>(sc.mu);
    const int w = static_cast<int>(sc.w), z = static_cast<int>(sc.z);

    // Construction-order data (f_PS, g-columns h_ij, rho, h); the stored
    // presentation is -f_PS reordered by degree, so every row is carried
    // across with the same permutation and sign.
    auto xm = [&](std::initializer_list<std::pair<int, int>> fac, size_t param, long long c = 1) {
        return umono(R, fam.nx, fac, param, c);
    };
    // g_ps[row][stacked over six parameters]
    std::vector<SparsePolynomial> g_ps = {
        xm({{1, u - z}}, 2, -1) + xm({{0, lam}}, 3, -1) + xm({{2, w}}, 4, -1) + xm({{1, z}}, 5, -1),
        xm({{1, u - z}}, 0) + xm({{0, lam}}, 1) + xm({{0, mu}}, 4, -1) + xm({{2, v - w}}, 5, -1),
        xm({{2, w}}, 0) + xm({{1, z}}, 1) + xm({{0, mu}}, 2) + xm({{2, v - w}}, 3),
    };
    auto um = [&](size_t pa, size_t pb, long long c) {
        std::vector<int> e(R->nvars(), 0);
        e[fam.nx + pa] += 1;
        e[fam.nx + pb] += 1;
        return SparsePolynomial::monomial(R, std::move(e), c);
    };
    std::vector<SparsePolynomial> h_ps = {
        um(2, 5, 1) + um(3, 4, -1),   // U3 U6 - U4 U5
        um(1, 4, 1) + um(0, 5, -1),   // U2 U5 - U1 U6
        um(0, 3, 1) + um(1, 2, -1),   // U1 U4 - U2 U3
    };
    auto U = [&](size_t j, long long c) {
        std::vector<int> e(R->nvars(), 0);
        e[fam.nx + j] = 1;
        return SparsePolynomial::monomial(R, std::move(e), c);
    };
    PolyMatrix rho_ps = {
        {U(0, -1), U(2, -1), U(4, -1)},
        {U(1, -1), U(3, -1), U(5, -1)},
    };

    fam.f.reserve(3);
    for (const auto& fp : pres.gens) fam.f.push_back(lift(fp, R));
    for (int i = 0; i < 3; ++i) {
        size_t src = static_cast<size_t>(pres.ps_order[static_cast<size_t>(i)]);
        fam.g.push_back(-g_ps[src]);
        fam.h.push_back(-h_ps[src]);
    }
    fam.r = lift_matrix(pres.relations, R);
    fam.rho.resize(2);
    for (int m = 0; m < 2; ++m)
        for (int i = 0; i < 3; ++i)
            fam.rho[static_cast<size_t>(m)].push_back(
                rho_ps[static_cast<size_t>(1 - m)]
                      [static_cast<size_t>(pres.ps_order[static_cast<size_t>(i)])]);
    fam.rho_prime = zero_matrix(R, 2, 3);
    verify_or_throw(fam);
    return fam;
}

DeformationFamily build_family_4(const NumericalSemigroup& S) {
    CurvePresentation pres = presentation_4_arithmetic(S);
    const Arith4Data& ad = *pres.arith4;
    const auto& n = S.min_generators();

    DeformationFamily fam;
    fam.base = pres;
    fam.nx = 4;
    fam.b_case = static_cast<int>(ad.b);
    const int v = static_cast<int>(ad.v);

    if (ad.b == 0 || ad.b == 1) {
        fam.param_names = {"U"};
        fam.param_weights = {ad.mu * n[0]};
        fam.uring = combined_ring(pres.ring, fam.param_names, fam.param_weights);
        const auto& R = fam.uring;
        fam.f.reserve(pres.gens.size());
        for (const auto& fp : pres.gens) fam.f.push_back(lift(fp, R));
        fam.r = lift_matrix(pres.relations, R);
        auto xm = [&](std::initializer_list<std::pair<int, int>> fac, long long c = 1) {
            return umono(R, fam.nx, fac, 0, c);
        };
        if (ad.b == 0) {
            fam.g = {SparsePolynomial(R), SparsePolynomial(R), SparsePolynomial(R), xm({})};
            fam.rho = zero_matrix(R, 5, 4);
            fam.rho[2][0] = xm({}, -1);
            fam.rho[3][1] = xm({}, -1);
            fam.rho[4][2] = xm({}, -1);
        } else {
            fam.g = {SparsePolynomial(R), SparsePolynomial(R), SparsePolynomial(R),
                     xm({{0, 1}}), xm({{1, 1}}), xm({{2, 1}})};
            fam.rho = zero_matrix(R, 8, 6);
            fam.rho[4][0] = xm({}, -1);
            fam.rho[5][1] = xm({}, -1);
            fam.rho[7][2] = xm({}, -1);
        }
        fam.h.assign(fam.f.size(), SparsePolynomial(R));
        fam.rho_prime = zero_matrix(R, fam.r.size(), fam.f.size());
        verify_or_throw(fam);
        return fam;
    }

    // b = 2: two parameters U at -(v-1) n_3 and V at -n_2, correction
    // h = (0, 0, -V^2, UV, 0).
    fam.param_names = {"U", "V"};
    fam.param_weights = {(ad.v - 1) * n[3], n[2]};
    fam.uring = combined_ring(pres.ring, fam.param_names, fam.param_weights);
    const auto& R = fam.uring;
    for (const auto& fp : pres.gens) fam.f.push_back(lift(fp, R));
    fam.r = lift_matrix(pres.relations, R);
    auto Um = [&](std::initializer_list<std::pair<int, int>> fac, long long c = 1) {
        return umono(R, fam.nx, fac, 0, c);
    };
    auto Vm = [&](std::initializer_list<std::pair<int, int>> fac, long long c = 1) {
        return umono(R, fam.nx, fac, 1, c);
    };
    fam.g = {Vm({{0, 1}}), Vm({{1, 1}}), SparsePolynomial(R),
             Um({{2, 1}}) + Vm({{3, v - 1}}), Um({{3, 1}})};
    auto UV = [&](size_t a, size_t b, long long c) {
        std::vector<int> e(R->nvars(), 0);
        e[fam.nx + a] += 1;
        e[fam.nx + b] += 1;
        return SparsePolynomial::monomial(R, std::move(e), c);
    };
    fam.h = {SparsePolynomial(R), SparsePolynomial(R), UV(1, 1, -1), UV(0, 1, 1),
             SparsePolynomial(R)};
    fam.rho = zero_matrix(R, 5, 5);
    fam.rho[0][0] = Vm({});
    fam.rho[1][1] = Vm({}, -1);
    fam.rho[2][1] = Um({});
    fam.rho[3][2] = Um({});
    fam.rho[3][3] = Vm({});
    fam.rho[4][4] = Vm({});
    fam.rho_prime = zero_matrix(R, 5, 5);
    verify_or_throw(fam);
    return fam;
}

DeformationFamily remark_family_4_b2(const NumericalSemigroup& S) {
    CurvePresentation pres = presentation_4_arithmetic(S);
    const Arith4Data& ad = *pres.arith4;
    if (ad.b != 2) throw std::invalid_argument("out of scope");
    const auto& n = S.min_generators();

    DeformationFamily fam;
    fam.base = pres;
    fam.nx = 4;
    fam.b_case = 2;
    fam.param_names = {"V"};
    fam.param_weights = {ad.mu * n[0]};
    fam.uring = combined_ring(pres.ring, fam.param_names, fam.param_weights);
    const auto& R = fam.uring;
    for (const auto& fp : pres.gens) fam.f.push_back(lift(fp, R));
    fam.r = lift_matrix(pres.relations, R);
    auto Vm = [&](std::initializer_list<std::pair<int, int>> fac, long long c = 1) {
        return umono(R, fam.nx, fac, 0, c);
    };
    fam.g = {SparsePolynomial(R), SparsePolynomial(R), SparsePolynomial(R), Vm({{0, 1}}),
             Vm({{1, 1}})};
    fam.h.assign(5, SparsePolynomial(R));
    fam.rho = zero_matrix(R, 5, 5);
    fam.rho[3][0] = Vm({}, -1);
    fam.rho[4][1] = Vm({}, -1);
    fam.rho_prime = zero_matrix(R, 5, 5);
    verify_or_throw(fam);
    return fam;
}

DeformationFamily restrict_parameters(const DeformationFamily& fam,
                                      const std::vector<std::string>& new_names,
                                      const std::vector<long long>& new_weights,
                                      const std::vector<std::pair<size_t, int>>& image) {
    if (image.size() != fam.param_names.size())
        throw std::invalid_argument("parameter image arity mismatch");
    DeformationFamily out;
    out.base = fam.base;
    out.nx = fam.nx;
    out.param_names = new_names;
    out.param_weights = new_weights;
    out.uring = combined_ring(fam.base.ring, new_names, new_weights);
    out.b_case = fam.b_case;

    out.graded = fam.graded;
    std::vector<std::pair<size_t, int>> map;
    for (size_t i = 0; i < fam.nx; ++i) map.push_back({i, 1});
    for (size_t j = 0; j < image.size(); ++j) {
        auto [target, sign] = image[j];
        if (sign == 0) map.push_back({0, 0});
        else {
            if (fam.param_weights[j] != new_weights[target]) out.graded = false;
            map.push_back({out.nx + target, sign});
        }
    }
    auto conv = [&](const SparsePolynomial& p) {
        return p.substitute_variables(out.uring, map);
    };
    for (const auto& p : fam.f) out.f.push_back(conv(p));
    for (const auto& p : fam.g) out.g.push_back(conv(p));
    for (const auto& p : fam.h) out.h.push_back(conv(p));
    for (const auto& row : fam.r) {
        std::vector<SparsePolynomial> r2;
        for (const auto& e : row) r2.push_back(conv(e));
        out.r.push_back(std::move(r2));
    }
    for (const auto& row : fam.rho) {
        std::vector<SparsePolynomial> r2;
        for (const auto& e : row) r2.push_back(conv(e));
        out.rho.push_back(std::move(r2));
    }
    for (const auto& row : fam.rho_prime) {
        std::vector<SparsePolynomial> r2;
        for (const auto& e : row) r2.push_back(conv(e));
        out.rho_prime.push_back(std::move(r2));
    }
    verify_or_throw(out);
    return out;
}

DeformationFamily diagonal_restriction(const DeformationFamily& fam) {
    if (fam.param_names.size() == 1) return fam;
    std::vector<std::pair<size_t, int>> image(fam.param_names.size(), {0, 1});
    return restrict_parameters(fam, {"U"}, {fam.param_weights[0]}, image);
}

FlatnessReport verify_flatness(const DeformationFamily& fam) {
    FlatnessReport rep;
    auto all_zero = [&](const std::vector<SparsePolynomial>& v, const char* tag) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                if (rep.failure.empty())
                    rep.failure = std::string(tag) + " entry " + std::to_string(i) + " = " +
                                  v[i].to_string();
                return false;
            }
        return true;
    };
    auto add = [](const std::vector<SparsePolynomial>& a, const std::vector<SparsePolynomial>& b) {
        std::vector<SparsePolynomial> out;
        for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
        return out;
    };
    rep.order1 = all_zero(add(mat_vec(fam.r, fam.g), mat_vec(fam.rho, fam.f)), "r g + rho f");
    rep.order2 = all_zero(add(add(mat_vec(fam.rho, fam.g), mat_vec(fam.r, fam.h)),
                              mat_vec(fam.rho_prime, fam.f)),
                          "rho g + r h + rho' f");
    rep.order3 = all_zero(add(mat_vec(fam.rho, fam.h), mat_vec(fam.rho_prime, fam.g)),
                          "rho h + rho' g");
    rep.order4 = all_zero(mat_vec(fam.rho_prime, fam.h), "rho' h");

    // Grading checks only apply to graded families; the diagonal merge of
    // unequal weights is exempt.
    rep.homogeneous = true;
    rep.weight_cutoff = true;
    if (fam.graded) {
        auto F = fam.F();
        for (size_t i = 0; i < F.size(); ++i) {
            if (!F[i].is_homogeneous() ||
                (!F[i].is_zero() && F[i].weighted_degree() != fam.base.degrees[i])) {
                rep.homogeneous = false;
                if (rep.failure.empty())
                    rep.failure = "inhomogeneous deformed equation " + std::to_string(i);
                break;
            }
        }
        // The iteration stops once a parameter monomial outweighs every
        // generator, so no correction term may be heavier than max deg f.
        long long dmax = *std::max_element(fam.base.degrees.begin(), fam.base.degrees.end());
        for (const auto& entry : fam.h)
            for (const auto& [e, c] : entry.terms()) {
                long long pw = 0;
                for (size_t j = fam.nx; j < e.size(); ++j)
                    pw += static_cast<long long>(e[j]) * fam.uring->weight(j);
                if (pw > dmax) {
                    rep.weight_cutoff = false;
                    if (rep.failure.empty()) rep.failure = "correction term heavier than deg f";
                }
            }
    }
    return rep;
}

ProjectivizedFamily projectivize(const DeformationFamily& fam) {
    if (!fam.graded)
        throw std::invalid_argument("projectivization needs the graded family");
    ProjectivizedFamily out;
    out.nx = fam.nx;
    std::vector<std::string> names;
    std::vector<long long> weights;
    for (size_t i = 0; i < fam.uring->nvars(); ++i) {
        names.push_back(fam.uring->name(i));
        weights.push_back(i < fam.nx ? fam.uring->weight(i) : 0);
    }
    names.push_back("x" + std::to_string(fam.nx));
    weights.push_back(1);
    out.ring = std::make_shared<PolyRing>(names, weights);
    const size_t xk1 = out.ring->nvars() - 1;

    for (const auto& eq : fam.F()) {
        SparsePolynomial lifted(out.ring);
        for (const auto& [e, c] : eq.terms()) {
            std::vector<int> e2(out.ring->nvars(), 0);
            std::copy(e.begin(), e.end(), e2.begin());
            long long extra = 0;
            for (size_t j = fam.nx; j < e.size(); ++j)
                extra += static_cast<long long>(e[j]) * fam.uring->weight(j);
            e2[xk1] = static_cast<int>(extra);
            lifted.add_term(e2, c);
        }
        if (!lifted.is_homogeneous())
            throw std::logic_error("projectivized equation lost homogeneity");
        out.equations.push_back(std::move(lifted));
    }
    // P_inf = (t^{n_0} : ... : t^{n_k} : 0): terms with x_{k+1} die, the
    // rest are the base binomials, which vanish toric-ally.
    out.infinity_point_on_fibres = true;
    for (const auto& eq : out.equations) {
        SparsePolynomial at_infinity(out.ring);
        for (const auto& [e, c] : eq.terms())
            if (e[xk1] == 0) at_infinity.add_term(e, c);
        if (!toric_substitute(at_infinity).empty()) out.infinity_point_on_fibres = false;
    }
    return out;
}

namespace {

struct FpPoly {
    // terms as (coeff, exponents over the x variables)
    std::vector<std::pair<long long, std::vector<int>>> terms;
    long long eval(const std::vector<long long>& pows_flat, size_t maxexp, long long p) const {
        long long acc = 0;
        for (const auto& [c, e] : terms) {
            long long t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = (t * pows_flat[i * (maxexp + 1) + static_cast<size_t>(e[i])]) % p;
            acc = (acc + t) % p;
        }
        return acc;
    }
};

long long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    size_t R = m.size(), C = R ? m[0].size() : 0, rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t piv = rank;
        while (piv < R && m[piv][col] % p == 0) ++piv;
        if (piv == R) continue;
        std::swap(m[rank], m[piv]);
        // Normalize pivot to 1 via Fermat inverse.
        long long inv = 1, base = ((m[rank][col] % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (size_t j = col; j < C; ++j) m[rank][j] = ((m[rank][j] % p) * inv % p + p) % p;
        for (size_t i = 0; i < R; ++i) {
            if (i == rank) continue;
            long long f = ((m[i][col] % p) + p) % p;
            if (!f) continue;
            for (size_t j = col; j < C; ++j)
                m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace

FibreScanReport finite_field_smoothness_scan(const DeformationFamily& fam, long long p,
                                             long long value, int jobs) {
    if (p < 2 || p > 37) throw std::invalid_argument("prime out of the supported range");
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument("p is not prime");
    // Structure constants the smoothness argument needs to be units.
    std::vector<long long> constants = {2, 3};
    if (fam.base.arith4) {
        constants.push_back(fam.base.arith4->v);
        constants.push_back(fam.base.arith4->mu);
        constants.push_back(3 * fam.base.arith4->v - 2);
    }
    for (long long c : constants)
        if (c % p == 0) throw std::invalid_argument("bad prime, choose another");

    // Specialize every parameter to `value` and reduce mod p.
    const size_t nx = fam.nx;
    std::vector<FpPoly> eqs;
    std::vector<std::vector<FpPoly>> jac;  // jac[eq][var]
    size_t maxexp = 1;
    auto specialize = [&](const SparsePolynomial& poly) {
        FpPoly out;
        std::map<std::vector<int>, long long> acc;
        for (const auto& [e, c] : poly.terms()) {
            long long coeff = static_cast<long long>(c % p);
            for (size_t j = nx; j < e.size(); ++j)
                for (int k = 0; k < e[j]; ++k) coeff = coeff * (value % p) % p;
            std::vector<int> xe(e.begin(), e.begin() + static_cast<long>(nx));
            acc[xe] = ((acc[xe] + coeff) % p + p) % p;
        }
        for (auto& [e, c] : acc) {
            if (c == 0) continue;
            for (int x : e) maxexp = std::max(maxexp, static_cast<size_t>(x));
            out.terms.push_back({c, e});
        }
        return out;
    };
    {
        auto F = fam.F();
        PolyRingPtr R = fam.uring;
        for (const auto& eq : F) eqs.push_back(specialize(eq));
        for (const auto& eq : F) {
            std::vector<FpPoly> row;
            for (size_t i = 0; i < nx; ++i) row.push_back(specialize(eq.partial_derivative(i)));
            jac.push_back(std::move(row));
        }
    }

    FibreScanReport rep;
    rep.p = p;
    rep.value = value;

    const long long total = [&] {
        long long t = 1;
        for (size_t i = 0; i < nx; ++i) t *= p;
        return t;
    }();

    auto scan_range = [&](long long lo, long long hi, FibreScanReport& local) {
        std::vector<long long> pows(nx * (maxexp + 1));
        std::vector<long long> point(nx);
        for (long long code = lo; code < hi; ++code) {
            long long rem = code;
            for (size_t i = 0; i < nx; ++i) {
                point[i] = rem % p;
                rem /= p;
            }
            for (size_t i = 0; i < nx; ++i) {
                pows[i * (maxexp + 1)] = 1;
                for (size_t e = 1; e <= maxexp; ++e)
                    pows[i * (maxexp + 1) + e] = pows[i * (maxexp + 1) + e - 1] * point[i] % p;
            }
            bool on_fibre = true;
            for (const auto& eq : eqs)
                if (eq.eval(pows, maxexp, p) != 0) { on_fibre = false; break; }
            if (!on_fibre) continue;
            local.points_on_fibre++;
            std::vector<std::vector<long long>> jm(jac.size(), std::vector<long long>(nx));
            for (size_t r = 0; r < jac.size(); ++r)
                for (size_t c = 0; c < nx; ++c) jm[r][c] = jac[r][c].eval(pows, maxexp, p);
            long long rank = rank_mod_p(std::move(jm), p);
            if (local.min_rank < 0 || rank < local.min_rank) local.min_rank = rank;
            bool origin = std::all_of(point.begin(), point.end(), [](long long x) { return x == 0; });
            if (origin) {
                local.origin_on_fibre = true;
                local.origin_singular = rank < static_cast<long long>(nx) - 1;
            }
            if (rank < static_cast<long long>(nx) - 1 &&
                local.singular_points.size() < 32)
                local.singular_points.push_back(point);
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        scan_range(0, total, rep);
    } else {
        std::vector<FibreScanReport> parts(static_cast<size_t>(jobs));
        std::vector<std::thread> threads;
        long long chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long long lo = t * chunk, hi = std::min<long long>(total, lo + chunk);
            threads.emplace_back([&, lo, hi, t] { scan_range(lo, hi, parts[static_cast<size_t>(t)]); });
        }
        for (auto& th : threads) th.join();
        for (const auto& part : parts) {
            rep.points_on_fibre += part.points_on_fibre;
            if (part.min_rank >= 0 && (rep.min_rank < 0 || part.min_rank < rep.min_rank))
                rep.min_rank = part.min_rank;
            rep.origin_on_fibre |= part.origin_on_fibre;
            rep.origin_singular |= part.origin_singular;
            for (const auto& pt : part.singular_points)
                if (rep.singular_points.size() < 32) rep.singular_points.push_back(pt);
        }
    }
    return rep;
}

}  // namespace semicurve
