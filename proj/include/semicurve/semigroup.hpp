#ifndef SEMICURVE_SEMIGROUP_HPP
#define SEMICURVE_SEMIGROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace semicurve {

/// A numerical semigroup: a co-finite additive submonoid of the naturals.
///
/// Canonical data: the sorted minimal generators, the sorted gap list,
/// the conductor c (least c with c + N contained in S) and the sorted
/// members below c.  Membership is a range check plus binary search.
class NumericalSemigroup {
public:
    /// Default-constructs the whole of N.
    NumericalSemigroup() : min_generators_{1} {}

    /// Semigroup generated by `gens`.  Requires gcd(gens) = 1.
    static NumericalSemigroup from_generators(const std::vector<long long>& gens);

    /// Semigroup with the given members below `conductor`; everything at or
    /// past `conductor` is a member.  `elements` must contain 0, be closed
    /// under addition below the conductor, and conductor-1 must be a gap
    /// (unless conductor is 0, which denotes the whole of N).
    static NumericalSemigroup from_small_elements(std::vector<long long> elements,
                                                  long long conductor);

    /// The whole monoid N.
    static NumericalSemigroup naturals();

    bool contains(long long x) const;
    long long conductor() const { return conductor_; }
    long long genus() const { return static_cast<long long>(gaps_.size()); }
    long long multiplicity() const;       // e, the least nonzero member
    long long frobenius() const { return conductor_ - 1; }  // -1 for N
    bool is_ordinary() const { return conductor_ <= multiplicity(); }
    bool is_naturals() const { return conductor_ == 0; }

    const std::vector<long long>& min_generators() const { return min_generators_; }
    const std::vector<long long>& gaps() const { return gaps_; }
    const std::vector<long long>& small_elements() const { return small_elements_; }

    /// Members s_0 = 0 < s_1 < ... up to and including `bound`.
    std::vector<long long> elements_upto(long long bound) const;

    /// The i-th member s_i (s_0 = 0).
    long long element_at(long long index) const;

    /// Index j with s_j == x; throws if x is not a member.
    long long index_of(long long x) const;

    bool operator==(const NumericalSemigroup& o) const {
        return conductor_ == o.conductor_ && small_elements_ == o.small_elements_;
    }

    std::string to_string() const;    // "S = <0, 8, ..., 16, 20 ->; gaps = {...}"

private:
    void finish_from_membership();    // derive gaps + minimal generators

    std::vector<long long> min_generators_;
    std::vector<long long> gaps_;
    std::vector<long long> small_elements_;  // members in [0, conductor)
    long long conductor_ = 0;
};

/// The invariants of a semigroup near its conductor.
///
/// For ordinary semigroups d and c_sub are 0 and d_prime / s_tilde are
/// absent; downstream order-bound code branches on is_ordinary.
struct SemigroupProfile {
    long long e = 0;        // multiplicity
    long long c = 0;        // conductor
    long long d = 0;        // dominant: largest member below c
    long long c_sub = 0;    // subconductor: first member of the run ending at d
    std::optional<long long> d_prime;   // largest member below c_sub, when c_sub > 0
    long long ell = 0;      // c - 1 - d, the gap count above d
    std::optional<long long> s_tilde;   // max{s in S : s <= d, s - ell not in S}
    long long g = 0;        // genus
    long long embdim = 0;
    long long tau = 0;      // Cohen-Macaulay type
    bool is_ordinary = false;
    bool is_acute = false;
};

SemigroupProfile profile(const NumericalSemigroup& S);

/// Apery set of S with respect to a nonzero member n: for each residue
/// r mod n the least member congruent to r.  Index = residue, so the
/// first entry is always 0 (the standard convention; the source material
/// sometimes lists n itself in place of 0).
std::vector<long long> apery_set(const NumericalSemigroup& S, long long n);

enum class SequenceKind { Arithmetic, GeneralizedArithmetic, AlmostArithmetic, None };

struct SequenceClassification {
    SequenceKind kind = SequenceKind::None;
    long long a = 0;   // witness: m_i = a*m_0 + i*d for i >= 1
    long long d = 0;
    long long removed_index = -1;  // for AlmostArithmetic: which generator is extra
};

/// Detects whether the minimal generators form an arithmetic sequence,
/// a generalized arithmetic sequence (m_i = a*m_0 + i*d), or an almost
/// arithmetic sequence (arithmetic after deleting one generator).
SequenceClassification classify_sequence(const NumericalSemigroup& S);

/// Visits every numerical semigroup of genus <= g_max exactly once,
/// walking the genus tree: the children of S are S minus one minimal
/// generator exceeding the Frobenius number.
void enumerate_by_genus(long long g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit);

/// Convenience: all semigroups of genus <= g_max in tree order.
std::vector<NumericalSemigroup> all_semigroups_by_genus(long long g_max);

/// Parses the CLI grammar "gen:4,9,11" or "elem:0,8,12,14,15,16;c=20".
NumericalSemigroup parse_semigroup_spec(const std::string& text);

}  // namespace semicurve

#endif
