#ifndef SEMICURVE_CURVE_HPP
#define SEMICURVE_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "semicurve/algebra.hpp"
#include "semicurve/semigroup.hpp"

namespace semicurve {

/// Structure constants of a 3-generated semigroup: the minimal u, v with
/// u*n1 in <n0,n2> (off the Apery set) and v*n2 in <n0,n1>, and the
/// decompositions u*n1 = lambda*n0 + w*n2, v*n2 = mu*n0 + z*n1.
/// The curve is a complete intersection iff z*w*mu = 0.
struct StructureConstants3 {
    long long u = 0, v = 0;
    long long lambda = 0, mu = 0, w = 0, z = 0;
    bool complete_intersection = false;
};

StructureConstants3 structure_constants_3(const NumericalSemigroup& S);

/// Arithmetic-sequence data for embdim 4: n_i = n_0 + i*d, n_0 = 3a + b.
struct Arith4Data {
    long long a = 0, b = 0, d = 0;
    long long v = 0, mu = 0, z = 0;
};

enum class PresentationKind { Embdim3, Arith4, Buchweitz };

/// Binomial presentation of the semigroup ring F[S]: homogeneous binomial
/// generators f (each vanishing under toric substitution), their weighted
/// degrees, and a relation matrix r with r*f = 0 as an exact identity.
struct CurvePresentation {
    NumericalSemigroup S;
    PolyRingPtr ring;                    // x_0..x_k, weight(x_i) = n_i
    std::vector<SparsePolynomial> gens;  // f_1..f_q
    std::vector<long long> degrees;      // d_j = deg f_j
    PolyMatrix relations;                // r, possibly empty for Buchweitz
    PresentationKind kind = PresentationKind::Embdim3;
    std::optional<StructureConstants3> sc3;
    std::optional<Arith4Data> arith4;
    // For embdim 3: gens[i] = -f_PS[ps_order[i]] relative to the canonical
    // construction order; the deformation builder reuses this mapping.
    std::vector<int> ps_order;
};

/// The three binomials of the Patil-Singh construction, sorted by weighted
/// degree and signed so the monomial containing x_0 is positive (the layout
/// the embdim-3 worked example uses).  Complete intersections are rejected.
CurvePresentation presentation_3(const NumericalSemigroup& S);

/// The generator family for an arithmetic sequence of embedding dimension
/// four, split by b = n_0 mod 3 (4, 6 or 5 binomials), with the hard-coded
/// relation matrix verified against r*f = 0 at construction.
CurvePresentation presentation_4_arithmetic(const NumericalSemigroup& S);

/// The generator family for a general arithmetic sequence (any embedding
/// dimension); no relation matrix.
std::vector<SparsePolynomial> arithmetic_ideal_generators(const NumericalSemigroup& S);

/// The 32-equation fixture for S = <13,...,18,20,22,23>.
CurvePresentation presentation_buchweitz();

/// J0[j][i] = x_i d(f_j)/d(x_i) and its evaluation at (1,...,1).
/// Construction verifies: rank J1 = embdim - 1, the Euler identity
/// sum_i n_i J1[j][i] = 0 for every row, and J0 = diag(t^{d_j}) J1 under
/// toric substitution.
struct JacobianPair {
    PolyMatrix J0;
    RationalMatrix J1;
    std::vector<long long> row_degrees;
    JacobianPair() : J1(0, 0) {}
};

JacobianPair jacobian(const CurvePresentation& pres);

}  // namespace semicurve

#endif
