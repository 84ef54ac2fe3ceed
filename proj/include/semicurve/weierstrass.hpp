#ifndef SEMICURVE_WEIERSTRASS_HPP
#define SEMICURVE_WEIERSTRASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "semicurve/semigroup.hpp"

namespace semicurve {

/// The m-fold sumset of the gaps of S (sums of m gaps with repetition),
/// returned sorted.  Requires m >= 2 and S != N.
std::vector<long long> sumset_Hm(const NumericalSemigroup& S, int m);

/// One row of the sumset obstruction test.
struct SumsetRow {
    int m = 0;
    long long card = 0;          // #H_m (0 when skipped by the shortcut)
    long long bound = 0;         // (2m - 1)(g - 1)
    bool violated = false;
    bool skipped = false;        // shortcut 2c < 3g applied, no computation
};

/// Necessary-condition certificate: a violation of #H_m <= (2m-1)(g-1)
/// proves S is not Weierstrass; a pass certifies nothing.
struct ObstructionReport {
    long long genus = 0;
    std::vector<SumsetRow> rows;
    std::optional<int> first_violation;
    bool shortcut_applied = false;   // 2c < 3g
    bool obstructed() const { return first_violation.has_value(); }
    /// "obstructed (non-Weierstrass)" or "no obstruction found"
    std::string verdict() const;
};

ObstructionReport buchweitz_test(const NumericalSemigroup& S, int m_max);

/// weight(S) = sum over gaps h_i of (h_i - i); exposed as a statistic only.
long long weight(const NumericalSemigroup& S);

/// The symmetric double {2s : s in S'} union {2g-1-2t : t in Z \ S'}.
/// Requires g >= 6*genus(S') + 4.  If S' is non-Weierstrass, so is the
/// output (by the double-cover construction); the caller carries the flag.
NumericalSemigroup torres_double(const NumericalSemigroup& S_prime, long long g);

/// Result of testing the gamma-hyperelliptic conditions and halving.
struct GammaReduction {
    std::optional<NumericalSemigroup> reduced;
    std::string failed_condition;  // empty on success
};

/// Tests: first gamma nonzero elements even, m_gamma = 4*gamma,
/// 4*gamma + 2 in S, and g >= 6*gamma + 4.  On success returns
/// S' = {0, m_1/2, ..., m_gamma/2} union {2*gamma + i}.  Contrapositive:
/// S' non-Weierstrass implies S non-Weierstrass.
GammaReduction gamma_hyperelliptic_reduce(const NumericalSemigroup& S, long long gamma);

}  // namespace semicurve

#endif
