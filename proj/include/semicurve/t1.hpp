#ifndef SEMICURVE_T1_HPP
#define SEMICURVE_T1_HPP

#include <string>
#include <vector>

#include "semicurve/curve.hpp"

namespace semicurve {

/// Index and degree sets of a graded piece: G_l = {i : n_i + l not in S},
/// H = generator rows j with d_j + l not in S.
struct GradedSets {
    std::vector<int> G;
    std::vector<size_t> H_rows;          // row indices into the presentation
    std::vector<long long> H_degrees;    // their degrees, ascending with rows
};

GradedSets graded_sets(const CurvePresentation& pres, long long ell);

/// One graded piece of T^1.  dim = max(0, #G - 1 - rho) where rho is the
/// rank of the H-rows of J(1) restricted to the G columns (the columns
/// outside G vanish on those rows, so this equals the row-space dimension).
/// Basis tuples are full-width, zero outside G, Euler-normalized so the
/// coefficient of the pivot coordinate (x_0 when 0 is in G) is zero, and
/// primitive with first nonzero entry positive.
struct T1Piece {
    long long ell = 0;
    GradedSets sets;
    long long rho = 0;
    long long dim = 0;
    std::vector<std::vector<BigInt>> basis;
};

T1Piece t1_dimension(const CurvePresentation& pres, long long ell);

/// Full graded table over the finite window of possibly nonzero degrees.
struct T1Table {
    std::vector<T1Piece> rows;           // ell ascending, only rows inside window
    long long total = 0;                 // dim T^1
    long long negative_total = 0;        // dim of the part in degrees < 0
    std::vector<long long> module_generator_degrees;  // where new B-module generators appear
    long long window_lo = 0;             // -2c + 2 - 2n_0
    long long window_hi = 0;             // c - 2 - n_0
    long long cutoff = 0;                // the reordered-rows vanishing bound (-d'_p)
    long long effective_lo = 0;          // max(window_lo, cutoff)
};

T1Table t1_scan(const CurvePresentation& pres);

/// Image of the degree-l derivation with coefficients alpha on the
/// generators: each entry is a scalar multiple of one monomial of weighted
/// degree d_j + l.  Entries whose target degree is a gap must cancel.
std::vector<SparsePolynomial> derivation_image(const CurvePresentation& pres, long long ell,
                                               const std::vector<BigInt>& alpha);

/// A basis image entry that has a constant or linear term, i.e. a
/// first-order deformation moving the singular point.
struct SmoothingCandidate {
    long long ell = 0;
    size_t basis_index = 0;
    size_t row = 0;
    std::string entry;
};

/// Checks whether every T^1 basis image lies in (M^2)^q.  If so the origin
/// stays singular on every first-order fibre and the curve is reported
/// obstructed; otherwise the entries with linear terms are listed.
struct M2Certificate {
    bool obstructed = false;
    std::vector<SmoothingCandidate> candidates;
    std::string verdict;
};

M2Certificate m2_obstruction_certificate(const CurvePresentation& pres);

}  // namespace semicurve

#endif
