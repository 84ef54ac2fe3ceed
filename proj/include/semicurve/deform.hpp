#ifndef SEMICURVE_DEFORM_HPP
#define SEMICURVE_DEFORM_HPP

#include <string>
#include <vector>

#include "semicurve/curve.hpp"

namespace semicurve {

/// A deformation of a monomial curve with its torus action: base equations
/// f and relation matrix r, a parameter-linear first-order term g, a
/// parameter-quadratic correction h, and lifted relation matrices rho,
/// rho'.  Everything lives in the combined ring (x variables followed by
/// parameter variables), graded with weight(U_j) = -deg(g_j).
struct DeformationFamily {
    CurvePresentation base;
    PolyRingPtr uring;
    size_t nx = 0;                       // x variables come first in uring
    std::vector<std::string> param_names;
    std::vector<long long> param_weights;
    std::vector<SparsePolynomial> f, g, h;
    PolyMatrix r, rho, rho_prime;
    int b_case = -1;                     // 0/1/2 for the arithmetic families
    // The diagonal U = V of the two-parameter case merges directions of
    // unequal weight, so that family is flat but no longer graded.
    bool graded = true;

    std::vector<SparsePolynomial> F() const;  // f + g + h
};

/// The six-parameter family of the Patil-Singh presentation, g-columns
/// the determinantal generators of Hom(I/I^2, B), rho the parameter matrix
/// and h its 2x2 minors.  Flat through order two with rho' = 0.
DeformationFamily build_family_3(const NumericalSemigroup& S);

/// Theorem-style one- or two-parameter families for arithmetic embedding
/// dimension 4; for b = 2 the family has two parameters (U, V) and a
/// quadratic correction.
DeformationFamily build_family_4(const NumericalSemigroup& S);

/// The one-parameter family on the T^1(-mu n_0) direction for b = 2, whose
/// every fibre is singular at the origin.
DeformationFamily remark_family_4_b2(const NumericalSemigroup& S);

/// Linear reparameterization: parameter j of `fam` becomes
/// sign * (new parameter image[j].first), or is killed when the sign is 0.
/// New parameters keep their own weights; the result is re-verified, and
/// loses the `graded` flag if any weight changes under the map.
DeformationFamily restrict_parameters(const DeformationFamily& fam,
                                      const std::vector<std::string>& new_names,
                                      const std::vector<long long>& new_weights,
                                      const std::vector<std::pair<size_t, int>>& image);

/// Diagonal restriction: all parameters merged into a single one (graded
/// only when the original weights agree).
DeformationFamily diagonal_restriction(const DeformationFamily& fam);

struct FlatnessReport {
    bool order1 = false;     // r g + rho f = 0
    bool order2 = false;     // rho g + r h + rho' f = 0
    bool order3 = false;     // rho h + rho' g = 0
    bool order4 = false;     // rho' h = 0
    bool homogeneous = false;
    bool weight_cutoff = false;  // no correction term heavier than max deg f
    std::string failure;     // first offending entry, if any
    bool all_ok() const {
        return order1 && order2 && order3 && order4 && homogeneous && weight_cutoff;
    }
};

/// Evaluates the lifting identities as exact polynomial identities in the
/// combined ring.
FlatnessReport verify_flatness(const DeformationFamily& fam);

/// Equations of the associated projective family: each parameter U_j is
/// replaced by U_j * x_{k+1}^{weight(U_j)} with weight(x_{k+1}) = 1, making
/// the equations homogeneous with weight-0 parameters.
struct ProjectivizedFamily {
    PolyRingPtr ring;    // x_0..x_k, params, x_{k+1}
    size_t nx = 0;       // index of x_{k+1} is ring->nvars() - 1
    std::vector<SparsePolynomial> equations;
    bool infinity_point_on_fibres = false;  // P_inf satisfies the equations
};

ProjectivizedFamily projectivize(const DeformationFamily& fam);

/// Exhaustive fibre scan over a small prime field.
struct FibreScanReport {
    long long p = 0;
    long long value = 0;              // common parameter value
    long long points_on_fibre = 0;
    long long min_rank = -1;          // -1 when the fibre is empty
    std::vector<std::vector<long long>> singular_points;  // rank < k
    bool origin_on_fibre = false;
    bool origin_singular = false;
};

/// Enumerates all affine points of the fibre at the given parameter value
/// over F_p and reports the Jacobian rank profile.  Primes dividing a
/// structure constant the smoothness argument needs are rejected.
FibreScanReport finite_field_smoothness_scan(const DeformationFamily& fam, long long p,
                                             long long value, int jobs = 1);

}  // namespace semicurve

#endif
