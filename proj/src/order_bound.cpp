#include "semicurve/order_bound.hpp"

#include <algorithm>
#include <stdexcept>

namespace semicurve {

long long nu(const NumericalSemigroup& S, long long s) {
    if (!S.contains(s)) throw std::invalid_argument("not a member");
    long long count = 0;
    for (long long a : S.elements_upto(s))
        if (S.contains(s - a)) ++count;
    return count;
}

PartitionCounts partition_counts(const NumericalSemigroup& S, long long s) {
    if (S.is_ordinary()) throw std::invalid_argument("partition undefined");
    if (!S.contains(s)) throw std::invalid_argument("not a member");
    const SemigroupProfile p = profile(S);
    const long long dp = p.d_prime.value_or(-1);
    PartitionCounts out;
    for (long long a : S.elements_upto(s)) {
        long long b = s - a;
        if (!S.contains(b)) continue;
        if (std::max(a, b) >= p.c) out.D++;
        else if (a >= p.c_sub && a <= p.d && b >= p.c_sub && b <= p.d) out.B++;
        else if (a <= dp && b <= dp) out.C++;
        else out.A++;
    }
    return out;
}

DeltaProfile delta_profile(const NumericalSemigroup& S, long long s_i) {
    if (S.is_ordinary()) throw std::invalid_argument("partition undefined");
    if (!S.contains(s_i)) throw std::invalid_argument("not a member");
    const SemigroupProfile p = profile(S);
    DeltaProfile d;
    d.s_i = s_i;
    d.s_next = S.element_at(S.index_of(s_i) + 1);
    d.at_i = partition_counts(S, s_i);
    d.at_next = partition_counts(S, d.s_next);
    d.alpha = d.at_next.A - d.at_i.A;
    d.beta = d.at_next.B - d.at_i.B;
    d.gamma = d.at_next.C - d.at_i.C;
    d.delta = d.at_next.D - d.at_i.D;
    d.next_minus_c_in_S = S.contains(d.s_next - p.c);
    d.i_minus_d_in_S = S.contains(s_i - p.d);
    d.next_minus_csub_in_S = S.contains(d.s_next - p.c_sub);
    const long long dp = p.d_prime.value_or(0);
    d.table_applicable = (s_i <= 2 * dp - 1) && S.contains(s_i + 1);
    return d;
}

NuProfile find_sm(const NumericalSemigroup& S) {
    const SemigroupProfile p = profile(S);
    NuProfile out;
    out.window_max = std::max(2 * p.d, 2 * p.c) + p.e;
    out.s_values = S.elements_upto(out.window_max);
    out.nu_values.reserve(out.s_values.size());
    for (long long s : out.s_values) out.nu_values.push_back(nu(S, s));

    if (S.is_ordinary()) return out;  // nu is non-decreasing, no s_m

    long long last_drop = -1;
    for (size_t j = 0; j + 1 < out.nu_values.size(); ++j)
        if (out.nu_values[j] > out.nu_values[j + 1]) last_drop = static_cast<long long>(j);
    if (last_drop < 0) throw std::logic_error("non-ordinary semigroup without a nu drop");
    out.m_index = last_drop;
    out.s_m = out.s_values[static_cast<size_t>(last_drop)];
    if (*out.s_m > 2 * p.d)
        throw std::logic_error("nu drop beyond 2d contradicts the difference lemma");
    for (size_t j = static_cast<size_t>(last_drop) + 1; j + 1 < out.nu_values.size(); ++j)
        if (out.nu_values[j] > out.nu_values[j + 1])
            throw std::logic_error("nu not monotone after the returned drop");
    return out;
}

long long order_bound(const NumericalSemigroup& S, long long k) {
    if (k < 0) throw std::invalid_argument("negative code index");
    const SemigroupProfile p = profile(S);
    // The minimum over j > k is attained by the index of 2c plus one:
    // past 2c each step adds exactly one pair.
    long long hi_index = S.index_of(std::max(S.element_at(k + 1), 2 * p.c)) + 1;
    long long best = -1;
    for (long long j = k + 1; j <= hi_index; ++j) {
        long long v = nu(S, S.element_at(j));
        if (best < 0 || v < best) best = v;
    }
    return best;
}

SmPrediction predict_sm(const NumericalSemigroup& S) {
    SmPrediction out;
    if (S.is_ordinary()) return out;
    const SemigroupProfile p = profile(S);
    const long long st = *p.s_tilde;
    const long long dp = *p.d_prime;

    auto contains_range = [&](long long lo, long long hi) {
        for (long long x = lo; x <= hi; ++x)
            if (!S.contains(x)) return false;
        return true;
    };

    if (st < 2 * dp - p.d) {
        out.upper = 2 * dp;
        if (contains_range(st + 2, dp)) {
            out.kase = SmCase::Case1Exact;
            out.exact = st + p.d;
            out.hypothesis = "s~ < 2d'-d and [s~+2, d'] in S";
        } else {
            out.kase = SmCase::Case1;
            out.hypothesis = "s~ < 2d'-d";
        }
        return out;
    }
    if (st >= dp + p.c_sub - p.d) {
        out.kase = SmCase::Case2a;
        out.exact = st + p.d;
        out.upper = st + p.d;
        out.hypothesis = "s~ >= d'+c'-d";
        return out;
    }
    if (st == 2 * dp - p.d) {
        out.kase = SmCase::Case2b;
        out.exact = st + p.d;
        out.upper = st + p.d;
        out.hypothesis = "s~ = 2d'-d";
        return out;
    }
    if (contains_range(dp - p.ell, dp)) {
        out.kase = SmCase::Case2cBounded;
        out.lower = st + dp - p.ell + 1;
        out.upper = 2 * dp;   // tighter than s~+d here, since s~+d >= 2d'
        out.hypothesis = "2d'-d < s~ < d'+c'-d and [d'-l, d'] in S";
        return out;
    }
    out.kase = SmCase::Case2Upper;
    out.upper = st + p.d;
    out.hypothesis = "2d'-d < s~ < d'+c'-d";
    return out;
}

ConjectureVerdict check_conjecture(const NumericalSemigroup& S) {
    if (S.is_ordinary()) throw std::invalid_argument("ordinary semigroup has no s_m");
    const SemigroupProfile p = profile(S);
    ConjectureVerdict v;
    v.s_m = *find_sm(S).s_m;
    v.bound = p.c + p.d - p.e;
    v.holds = v.s_m >= v.bound;

    const long long dp = *p.d_prime;
    const long long st = *p.s_tilde;
    if (v.s_m >= st + p.d || (v.s_m >= 2 * dp && st < dp)) v.certified_by.push_back(1);
    bool range_ok = true;
    for (long long x = dp - p.ell; x <= dp; ++x)
        if (!S.contains(x)) { range_ok = false; break; }
    if (2 * dp - p.d < st && st < dp + p.c_sub - p.d && range_ok) v.certified_by.push_back(2);
    if (p.ell == 2 || p.ell == 3) v.certified_by.push_back(3);
    if (p.tau <= 7) v.certified_by.push_back(4);
    if (p.e <= 8) v.certified_by.push_back(5);
    SequenceClassification cls = classify_sequence(S);
    if (cls.kind == SequenceKind::Arithmetic || cls.kind == SequenceKind::GeneralizedArithmetic)
        v.certified_by.push_back(6);
    if (cls.kind == SequenceKind::AlmostArithmetic && p.embdim <= 5) v.certified_by.push_back(7);
    return v;
}

}  // namespace semicurve
