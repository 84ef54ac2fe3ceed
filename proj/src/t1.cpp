#include "semicurve/t1.hpp"

#include <algorithm>
#include <stdexcept>

namespace semicurve {

namespace {

// Euler normalization pins the first G coordinate (x_0 whenever 0 is in G).
constexpr size_t kPivot = 0;

// J(1) rows in H restricted to the G columns, with an optional extra row
// pinning the pivot coordinate to zero.
RationalMatrix restricted_system(const JacobianPair& jp, const GradedSets& gs, bool pin) {
    const size_t R = gs.H_rows.size();
    const size_t C = gs.G.size();
    RationalMatrix m(R + (pin ? 1 : 0), C);
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c < C; ++c)
            m.at(r, c) = jp.J1.at(gs.H_rows[r], static_cast<size_t>(gs.G[c]));
    if (pin) m.at(R, kPivot) = 1;
    return m;
}

T1Piece t1_piece_with(const CurvePresentation& pres, const JacobianPair& jp, long long ell) {
    T1Piece piece;
    piece.ell = ell;
    piece.sets = graded_sets(pres, ell);
    const long long nG = static_cast<long long>(piece.sets.G.size());
    if (nG == 0) return piece;

    piece.rho = rational_rank(restricted_system(jp, piece.sets, false));
    piece.dim = std::max<long long>(0, nG - 1 - piece.rho);
    if (piece.dim == 0) return piece;

    // Solutions with the pivot coordinate pinned to zero form a full set of
    // coset representatives modulo the Euler vector.
    auto null_b = nullspace_basis(restricted_system(jp, piece.sets, true));
    if (static_cast<long long>(null_b.size()) != piece.dim)
        throw std::logic_error("pinned nullspace dimension disagrees with the rank formula");
    for (const auto& v : null_b) {
        std::vector<BigInt> full(pres.ring->nvars(), 0);
        for (size_t c = 0; c < v.size(); ++c) full[static_cast<size_t>(piece.sets.G[c])] = v[c];
        piece.basis.push_back(std::move(full));
    }
    return piece;
}

}  // namespace

GradedSets graded_sets(const CurvePresentation& pres, long long ell) {
    GradedSets gs;
    for (size_t i = 0; i < pres.ring->nvars(); ++i)
        if (!pres.S.contains(pres.ring->weight(i) + ell)) gs.G.push_back(static_cast<int>(i));
    for (size_t j = 0; j < pres.gens.size(); ++j)
        if (!pres.S.contains(pres.degrees[j] + ell)) {
            gs.H_rows.push_back(j);
            gs.H_degrees.push_back(pres.degrees[j]);
        }
    return gs;
}

T1Piece t1_dimension(const CurvePresentation& pres, long long ell) {
    return t1_piece_with(pres, jacobian(pres), ell);
}

T1Table t1_scan(const CurvePresentation& pres) {
    const SemigroupProfile prof = profile(pres.S);
    const long long n0 = pres.ring->weight(0);
    const long long n1 = pres.ring->weight(1);
    T1Table t;
    t.window_lo = -2 * prof.c + 2 - 2 * n0;
    t.window_hi = prof.c - 2 - n0;

    const JacobianPair jp = jacobian(pres);

    // Reordered-rows vanishing bound: with the generators sorted by degree,
    // T^1(l) = 0 below minus the degree at which the top rows first reach
    // full rank.
    {
        std::vector<size_t> order(pres.gens.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return pres.degrees[a] < pres.degrees[b]; });
        std::vector<size_t> cols(pres.ring->nvars());
        for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
        std::vector<size_t> rows;
        t.cutoff = t.window_lo;
        for (size_t p = 0; p < order.size(); ++p) {
            rows.push_back(order[p]);
            if (rational_rank(jp.J1.select(rows, cols)) ==
                static_cast<long long>(pres.ring->nvars()) - 1) {
                t.cutoff = -pres.degrees[order[p]];
                break;
            }
        }
    }
    t.effective_lo = std::max(t.window_lo, t.cutoff);

    // Module generators: a degree contributes generators where the pieces
    // arriving from below (shift by a nonzero member) do not span.
    std::vector<T1Piece> kept;
    for (long long ell = t.effective_lo; ell <= t.window_hi; ++ell) {
        T1Piece piece = t1_piece_with(pres, jp, ell);
        if (piece.dim > 0) {
            std::vector<std::vector<BigRat>> below;
            for (const auto& prev : kept) {
                if (prev.dim == 0) continue;
                long long s = ell - prev.ell;
                if (s <= 0 || !pres.S.contains(s)) continue;
                for (const auto& alpha : prev.basis) {
                    // Project onto the G coordinates at this degree and
                    // renormalize so the pivot coordinate is zero.
                    std::vector<BigRat> v(piece.sets.G.size());
                    for (size_t c = 0; c < piece.sets.G.size(); ++c)
                        v[c] = BigRat(alpha[static_cast<size_t>(piece.sets.G[c])]);
                    if (v[kPivot] != 0) {
                        BigRat f = v[kPivot] / BigRat(pres.ring->weight(
                                                   static_cast<size_t>(piece.sets.G[kPivot])));
                        for (size_t c = 0; c < v.size(); ++c)
                            v[c] -= f * BigRat(pres.ring->weight(
                                           static_cast<size_t>(piece.sets.G[c])));
                    }
                    below.push_back(std::move(v));
                }
            }
            long long span_below = 0;
            if (!below.empty()) {
                RationalMatrix m(below.size(), piece.sets.G.size());
                for (size_t r = 0; r < below.size(); ++r)
                    for (size_t c = 0; c < piece.sets.G.size(); ++c) m.at(r, c) = below[r][c];
                span_below = rational_rank(m);
            }
            for (long long k = 0; k < piece.dim - span_below; ++k)
                t.module_generator_degrees.push_back(ell);
            t.total += piece.dim;
            if (ell < 0) t.negative_total += piece.dim;
        }
        kept.push_back(std::move(piece));
    }
    t.rows = std::move(kept);

    // Vanishing-window spot checks just outside the window.
    for (long long off = 1; off <= 3; ++off) {
        if (t1_piece_with(pres, jp, t.effective_lo - off).dim != 0)
            throw std::logic_error("nonzero T^1 piece below the vanishing window");
        if (t1_piece_with(pres, jp, t.window_hi + off).dim != 0)
            throw std::logic_error("nonzero T^1 piece above the vanishing window");
    }
    // dim T^1(c - 1 - n_0 - n_1) > 0 always.
    if (t1_piece_with(pres, jp, prof.c - 1 - n0 - n1).dim <= 0)
        throw std::logic_error("piece at c-1-n0-n1 unexpectedly vanishes");
    // For l >= c - 2n_1 the matrix part is empty and dim = max(0, #G - 1).
    for (const auto& row : t.rows) {
        if (row.ell < prof.c - 2 * n1) continue;
        long long expect = std::max<long long>(0, static_cast<long long>(row.sets.G.size()) - 1);
        if (row.dim != expect)
            throw std::logic_error("tail formula dim = max(0, #G - 1) failed");
    }
    // Ordinary/hyperelliptic lower window: dim = 0 below -4g - 2.
    if (pres.S.is_ordinary() || pres.S.contains(2)) {
        for (const auto& row : t.rows)
            if (row.ell < -4 * prof.g - 2 && row.dim != 0)
                throw std::logic_error("hyperelliptic window violation");
    }
    return t;
}

std::vector<SparsePolynomial> derivation_image(const CurvePresentation& pres, long long ell,
                                               const std::vector<BigInt>& alpha) {
    if (alpha.size() != pres.ring->nvars())
        throw std::invalid_argument("coefficient tuple has wrong arity");

    // Monomial representative of a member: peel off the least usable
    // generator so the choice is deterministic.
    auto rep = [&](long long D) {
        std::vector<int> e(pres.ring->nvars(), 0);
        while (D > 0) {
            bool found = false;
            for (size_t i = 0; i < pres.ring->nvars(); ++i) {
                long long w = pres.ring->weight(i);
                if (w <= D && pres.S.contains(D - w)) {
                    e[i]++;
                    D -= w;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("member without monomial representative");
        }
        return e;
    };

    std::vector<SparsePolynomial> image;
    for (size_t j = 0; j < pres.gens.size(); ++j) {
        const auto& terms = pres.gens[j].terms();
        if (terms.size() != 2) throw std::invalid_argument("generator is not a binomial");
        BigInt coeff = 0;
        for (const auto& [e, c] : terms) {
            BigInt s = 0;
            for (size_t i = 0; i < e.size(); ++i) s += alpha[i] * e[i];
            coeff += s * c;
        }
        const long long target = pres.degrees[j] + ell;
        if (!pres.S.contains(target) || target < 0) {
            if (coeff != 0) throw std::invalid_argument("inconsistent basis");
            image.push_back(SparsePolynomial(pres.ring));
        } else if (coeff == 0) {
            image.push_back(SparsePolynomial(pres.ring));
        } else {
            image.push_back(SparsePolynomial::monomial(pres.ring, rep(target), coeff));
        }
    }
    return image;
}

M2Certificate m2_obstruction_certificate(const CurvePresentation& pres) {
    M2Certificate cert;
    const JacobianPair jp = jacobian(pres);
    T1Table table = t1_scan(pres);

    // A class sits inside (M^2)^q iff some representative modulo the
    // trivial directions t^{l+n_i} d/dx_i (i outside G_l) kills every
    // entry whose target degree is 0 or a minimal generator; entries of
    // any other degree have only representatives with at least two factors.
    const auto& gens = pres.S.min_generators();
    auto is_dangerous_degree = [&](long long d) {
        return d == 0 || std::binary_search(gens.begin(), gens.end(), d);
    };

    for (const auto& row : table.rows) {
        std::vector<size_t> dangerous;
        for (size_t j = 0; j < pres.gens.size(); ++j)
            if (is_dangerous_degree(pres.degrees[j] + row.ell)) dangerous.push_back(j);
        std::vector<size_t> trivial_cols;
        for (size_t i = 0; i < pres.ring->nvars(); ++i)
            if (pres.S.contains(pres.ring->weight(i) + row.ell)) trivial_cols.push_back(i);

        for (size_t b = 0; b < row.basis.size(); ++b) {
            const auto& alpha = row.basis[b];
            if (dangerous.empty()) continue;
            std::vector<BigRat> rhs(dangerous.size(), BigRat(0));
            bool any = false;
            for (size_t r = 0; r < dangerous.size(); ++r) {
                BigRat acc = 0;
                for (size_t i = 0; i < alpha.size(); ++i)
                    acc += jp.J1.at(dangerous[r], i) * BigRat(alpha[i]);
                rhs[r] = acc;
                if (acc != 0) any = true;
            }
            if (!any) continue;
            // Solvability of A c = rhs over the trivial columns.
            RationalMatrix A(dangerous.size(), trivial_cols.size());
            RationalMatrix Ab(dangerous.size(), trivial_cols.size() + 1);
            for (size_t r = 0; r < dangerous.size(); ++r) {
                for (size_t t = 0; t < trivial_cols.size(); ++t) {
                    A.at(r, t) = jp.J1.at(dangerous[r], trivial_cols[t]);
                    Ab.at(r, t) = A.at(r, t);
                }
                Ab.at(r, trivial_cols.size()) = rhs[r];
            }
            if (rational_rank(A) == rational_rank(Ab)) continue;  // removable

            auto image = derivation_image(pres, row.ell, alpha);
            for (size_t j = 0; j < image.size(); ++j) {
                if (image[j].is_zero()) continue;
                int total = 0;
                for (const auto& [e, c] : image[j].terms())
                    for (int x : e) total += x;
                if (total <= 1) {
                    SmoothingCandidate sc;
                    sc.ell = row.ell;
                    sc.basis_index = b;
                    sc.row = j;
                    sc.entry = image[j].to_string();
                    cert.candidates.push_back(std::move(sc));
                }
            }
        }
    }
    cert.obstructed = cert.candidates.empty();
    cert.verdict = cert.obstructed
                       ? "obstructed: all first-order deformations singular at the origin"
                       : "not obstructed: basis images with linear terms exist";
    return cert;
}

}  // namespace semicurve
