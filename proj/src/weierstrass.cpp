#include "semicurve/weierstrass.hpp"

#include <algorithm>
#include <stdexcept>

namespace semicurve {

namespace {

// Plain bitset over [0, limit] with popcount, for iterated sumsets.
class Bits {
public:
    explicit Bits(long long limit) : limit_(limit), words_((limit >> 6) + 1, 0) {}
    void set(long long i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    bool get(long long i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
    long long count() const {
        long long n = 0;
        for (auto w : words_) n += __builtin_popcountll(w);
        return n;
    }
    long long limit() const { return limit_; }

private:
    long long limit_;
    std::vector<unsigned long long> words_;
};

Bits sum_with_gaps(const Bits& a, const std::vector<long long>& gaps, long long limit) {
    Bits out(limit);
    for (long long i = 0; i <= a.limit(); ++i) {
        if (!a.get(i)) continue;
        for (long long h : gaps)
            if (i + h <= limit) out.set(i + h);
    }
    return out;
}

}  // namespace

std::vector<long long> sumset_Hm(const NumericalSemigroup& S, int m) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (S.is_naturals()) throw std::invalid_argument("no gaps");
    const auto& gaps = S.gaps();
    const long long limit = m * (S.conductor() - 1);
    Bits acc(limit);
    for (long long h : gaps) acc.set(h);
    for (int i = 1; i < m; ++i) acc = sum_with_gaps(acc, gaps, limit);
    std::vector<long long> out;
    for (long long x = 0; x <= limit; ++x)
        if (acc.get(x)) out.push_back(x);
    return out;
}

std::string ObstructionReport::verdict() const {
    return obstructed() ? "obstructed (non-Weierstrass)" : "no obstruction found";
}

ObstructionReport buchweitz_test(const NumericalSemigroup& S, int m_max) {
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    if (S.is_naturals()) throw std::invalid_argument("no gaps");
    ObstructionReport rep;
    rep.genus = S.genus();
    rep.shortcut_applied = 2 * S.conductor() < 3 * rep.genus;
    for (int m = 2; m <= m_max; ++m) {
        SumsetRow row;
        row.m = m;
        row.bound = (2LL * m - 1) * (rep.genus - 1);
        if (rep.shortcut_applied) {
            row.skipped = true;   // inequality holds for every m >= 2
        } else {
            row.card = static_cast<long long>(sumset_Hm(S, m).size());
            row.violated = row.card > row.bound;
            if (row.violated && !rep.first_violation) rep.first_violation = m;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

long long weight(const NumericalSemigroup& S) {
    long long w = 0;
    long long i = 1;
    for (long long h : S.gaps()) w += h - i++;
    return w;
}

NumericalSemigroup torres_double(const NumericalSemigroup& S_prime, long long g) {
    const long long gamma = S_prime.genus();
    if (g < 6 * gamma + 4) throw std::invalid_argument("hypothesis violated");
    // Members below the conductor 2g: even 2s for s in S', and odd
    // 2g-1-2t for non-members t >= 0.  All odd x >= 2g+1 come from t < 0.
    std::vector<long long> small;
    for (long long x = 0; x < 2 * g; ++x) {
        if (x % 2 == 0) {
            if (S_prime.contains(x / 2)) small.push_back(x);
        } else {
            long long t = (2 * g - 1 - x) / 2;
            if (!S_prime.contains(t)) small.push_back(x);
        }
    }
    return NumericalSemigroup::from_small_elements(small, 2 * g);
}

GammaReduction gamma_hyperelliptic_reduce(const NumericalSemigroup& S, long long gamma) {
    GammaReduction out;
    if (gamma < 0) {
        out.failed_condition = "gamma must be non-negative";
        return out;
    }
    if (S.genus() < 6 * gamma + 4) {
        out.failed_condition = "genus below 6*gamma + 4";
        return out;
    }
    std::vector<long long> first;
    for (long long x : S.elements_upto(S.conductor() + 4 * gamma + 2)) {
        if (x == 0) continue;
        if (static_cast<long long>(first.size()) >= gamma) break;
        first.push_back(x);
    }
    if (static_cast<long long>(first.size()) < gamma) {
        out.failed_condition = "fewer than gamma nonzero elements in range";
        return out;
    }
    for (long long x : first)
        if (x % 2 != 0) {
            out.failed_condition = "first gamma elements not all even";
            return out;
        }
    if (gamma > 0 && first.back() != 4 * gamma) {
        out.failed_condition = "m_gamma != 4*gamma";
        return out;
    }
    if (!S.contains(4 * gamma + 2)) {
        out.failed_condition = "4*gamma + 2 not a member";
        return out;
    }
    // S' = {0, m_1/2, ..., m_gamma/2} union {2*gamma + i : i >= 0}; the
    // conductor may be below 2*gamma if 4*gamma - 2 is among the m_i.
    std::vector<bool> member(static_cast<size_t>(2 * gamma + 1), false);
    member[0] = true;
    for (long long x : first) member[static_cast<size_t>(x / 2)] = true;
    long long c = 2 * gamma;
    while (c > 0 && member[static_cast<size_t>(c - 1)]) --c;
    std::vector<long long> small;
    for (long long x = 0; x < c; ++x)
        if (member[static_cast<size_t>(x)]) small.push_back(x);
    out.reduced = NumericalSemigroup::from_small_elements(small, c);
    return out;
}

}  // namespace semicurve
