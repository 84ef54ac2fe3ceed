#ifndef SEMICURVE_ORDER_BOUND_HPP
#define SEMICURVE_ORDER_BOUND_HPP

#include <optional>
#include <string>
#include <vector>

#include "semicurve/semigroup.hpp"

namespace semicurve {

/// nu(s) = number of ordered pairs of members summing to s.
/// s must be a member; requesting nu at a gap is an error.
long long nu(const NumericalSemigroup& S, long long s);

/// Sizes of the four blocks of N(s): A (one coordinate below the
/// subconductor, the other in [c', d]), B (both in [c', d]), C (both <= d'),
/// D (max coordinate >= c).  Defined only for non-ordinary S.
struct PartitionCounts {
    long long A = 0, B = 0, C = 0, D = 0;
    long long total() const { return A + B + C + D; }
};

PartitionCounts partition_counts(const NumericalSemigroup& S, long long s);

/// Differences of the partition counts between a member s_i and the next
/// member, plus the data of the eta-table: the three membership predicates
/// and whether the table row applies (s_i <= 2d'-1 and s_i + 1 in S).
struct DeltaProfile {
    long long s_i = 0, s_next = 0;
    long long alpha = 0, beta = 0, gamma = 0, delta = 0;
    PartitionCounts at_i, at_next;
    bool next_minus_c_in_S = false;   // s_{i+1} - c in S
    bool i_minus_d_in_S = false;      // s_i - d in S
    bool next_minus_csub_in_S = false;  // s_{i+1} - c' in S
    bool table_applicable = false;
    long long eta() const { return alpha + beta + gamma + delta; }
};

DeltaProfile delta_profile(const NumericalSemigroup& S, long long s_i);

/// The nu sequence over the scan window, with the last strict drop if any.
struct NuProfile {
    std::vector<long long> s_values;
    std::vector<long long> nu_values;
    std::optional<long long> m_index;  // largest index with nu(s_m) > nu(s_{m+1})
    std::optional<long long> s_m;
    long long window_max = 0;          // members scanned up to max(2d, 2c) + e
};

/// Computes nu over all members up to max(2d, 2c) + e and locates the last
/// strict drop.  Beyond 2c the increments are +1, so the window suffices;
/// monotonicity after the drop is verified and a violation throws.
NuProfile find_sm(const NumericalSemigroup& S);

/// Feng-Rao order bound d_ORD(C_k) = min{nu(s_j) : j > k}.
long long order_bound(const NumericalSemigroup& S, long long k);

enum class SmCase {
    OrdinaryNone,   // ordinary semigroups have no s_m
    Case1,          // s_tilde < 2d' - d: s_m <= 2d'
    Case1Exact,     // ... and [s_tilde + 2, d'] in S: s_m = s_tilde + d
    Case2a,         // s_tilde >= d' + c' - d: s_m = s_tilde + d
    Case2b,         // s_tilde = 2d' - d: s_m = s_tilde + d
    Case2cBounded,  // 2d'-d < s_tilde < d'+c'-d and [d'-ell, d'] in S
    Case2Upper      // ... without the extra hypothesis: only s_m <= s_tilde + d
};

/// Classification of S into the cases of the s_m evaluation theorem with
/// the implied exact value or bounds.
struct SmPrediction {
    SmCase kase = SmCase::OrdinaryNone;
    std::optional<long long> exact;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::string hypothesis;
};

SmPrediction predict_sm(const NumericalSemigroup& S);

/// Verdict on the conjecture s_m >= c + d - e for one semigroup, with the
/// list of proved cases that certify it (1..7; empty means the scan relies
/// on brute force alone).
struct ConjectureVerdict {
    long long s_m = 0;
    long long bound = 0;   // c + d - e
    bool holds = false;
    std::vector<int> certified_by;
};

ConjectureVerdict check_conjecture(const NumericalSemigroup& S);

}  // namespace semicurve

#endif
