#include "semicurve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace semicurve {

namespace {

long long vector_gcd(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::naturals() {
    NumericalSemigroup s;
    s.conductor_ = 0;
    s.min_generators_ = {1};
    return s;
}

bool NumericalSemigroup::contains(long long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return std::binary_search(small_elements_.begin(), small_elements_.end(), x);
}

long long NumericalSemigroup::multiplicity() const {
    if (conductor_ == 0) return 1;
    if (small_elements_.size() > 1) return small_elements_[1];
    return conductor_;
}

std::vector<long long> NumericalSemigroup::elements_upto(long long bound) const {
    std::vector<long long> out;
    for (long long x : small_elements_) {
        if (x > bound) return out;
        out.push_back(x);
    }
    for (long long x = conductor_; x <= bound; ++x) out.push_back(x);
    return out;
}

long long NumericalSemigroup::element_at(long long index) const {
    const long long n_small = static_cast<long long>(small_elements_.size());
    if (index < n_small) return small_elements_[index];
    return conductor_ + (index - n_small);
}

long long NumericalSemigroup::index_of(long long x) const {
    if (!contains(x)) throw std::invalid_argument("not a member");
    if (x >= conductor_)
        return static_cast<long long>(small_elements_.size()) + (x - conductor_);
    auto it = std::lower_bound(small_elements_.begin(), small_elements_.end(), x);
    return it - small_elements_.begin();
}

void NumericalSemigroup::finish_from_membership() {
    gaps_.clear();
    for (long long x = 1; x < conductor_; ++x)
        if (!contains(x)) gaps_.push_back(x);

    // A nonzero member is a minimal generator iff it is not a sum of two
    // nonzero members.  Generators are bounded by c + e - 1.
    min_generators_.clear();
    if (conductor_ == 0) {
        min_generators_ = {1};
        return;
    }
    const long long e = multiplicity();
    std::vector<long long> members = elements_upto(conductor_ + e - 1);
    for (long long s : members) {
        if (s == 0) continue;
        bool decomposable = false;
        for (long long a : members) {
            if (a == 0) continue;
            if (2 * a > s) break;
            if (contains(s - a)) { decomposable = true; break; }
        }
        if (!decomposable) min_generators_.push_back(s);
    }
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    for (long long g : gens)
        if (g <= 0) throw std::invalid_argument("no generators");
    if (vector_gcd(gens) != 1) throw std::invalid_argument("not co-finite");

    std::vector<long long> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted[0] == 1) return naturals();

    // Apery set over residues mod the least generator, by round-robin
    // relaxation: ap[r] = least member congruent to r.
    const long long n0 = sorted[0];
    const long long INF = -1;
    std::vector<long long> ap(static_cast<size_t>(n0), INF);
    ap[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (long long r = 0; r < n0; ++r) {
            if (ap[r] == INF) continue;
            for (long long g : sorted) {
                long long v = ap[r] + g;
                long long rr = v % n0;
                if (ap[rr] == INF || v < ap[rr]) {
                    ap[rr] = v;
                    changed = true;
                }
            }
        }
    }
    long long frob = 0;
    for (long long r = 0; r < n0; ++r) frob = std::max(frob, ap[r] - n0);

    NumericalSemigroup s;
    s.conductor_ = frob + 1;
    for (long long x = 0; x < s.conductor_; ++x)
        if (ap[x % n0] <= x) s.small_elements_.push_back(x);
    s.finish_from_membership();
    return s;
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<long long> elements,
                                                           long long conductor) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (conductor < 0) throw std::invalid_argument("not a semigroup");
    if (conductor == 0) {
        if (!elements.empty() && elements != std::vector<long long>{0})
            throw std::invalid_argument("not a semigroup");
        return naturals();
    }
    if (elements.empty() || elements[0] != 0)
        throw std::invalid_argument("not a semigroup");
    for (long long x : elements)
        if (x < 0 || x >= conductor) throw std::invalid_argument("not a semigroup");
    if (std::binary_search(elements.begin(), elements.end(), conductor - 1))
        throw std::invalid_argument("conductor not minimal");

    auto member = [&](long long x) {
        if (x < 0) return false;
        if (x >= conductor) return true;
        return std::binary_search(elements.begin(), elements.end(), x);
    };
    for (long long a : elements)
        for (long long b : elements) {
            if (a == 0 || b == 0 || a + b >= conductor) continue;
            if (!member(a + b)) throw std::invalid_argument("not a semigroup");
        }

    NumericalSemigroup s;
    s.conductor_ = conductor;
    s.small_elements_ = std::move(elements);
    s.finish_from_membership();
    return s;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream os;
    os << "S = <";
    for (size_t i = 0; i < small_elements_.size(); ++i) {
        if (i) os << ", ";
        os << small_elements_[i];
    }
    if (!small_elements_.empty()) os << ", ";
    os << conductor_ << " ->; gaps = {";
    for (size_t i = 0; i < gaps_.size(); ++i) {
        if (i) os << ", ";
        os << gaps_[i];
    }
    os << "}";
    return os.str();
}

SemigroupProfile profile(const NumericalSemigroup& S) {
    SemigroupProfile p;
    p.e = S.multiplicity();
    p.c = S.conductor();
    p.g = S.genus();
    p.embdim = static_cast<long long>(S.min_generators().size());
    p.is_ordinary = S.is_ordinary();

    // Cohen-Macaulay type: gaps x with x + (S \ {0}) inside S.  Only sums
    // below the conductor need checking.
    for (long long x : S.gaps()) {
        bool pf = true;
        for (long long s : S.small_elements()) {
            if (s == 0) continue;
            if (!S.contains(x + s)) { pf = false; break; }
        }
        if (pf) p.tau++;
    }

    if (p.is_ordinary) {
        p.d = 0;
        p.c_sub = 0;
        p.ell = p.c - 1 - p.d;   // e - 1 gaps above the dominant 0
        if (S.is_naturals()) p.ell = 0;
        if (p.ell >= 1) p.s_tilde = 0;  // 0 - ell is a gap of N only when ell >= 1
        p.is_acute = true;
        return p;
    }

    const auto& small = S.small_elements();
    p.d = small.back();
    long long c_sub = 0;
    for (long long s : small)
        if (!S.contains(s - 1) || s == 0) c_sub = std::max(c_sub, s);
    p.c_sub = c_sub;
    if (c_sub > 0) {
        long long dp = 0;
        for (long long s : small)
            if (s < c_sub) dp = std::max(dp, s);
        p.d_prime = dp;
    }
    p.ell = p.c - 1 - p.d;
    for (long long i = static_cast<long long>(small.size()) - 1; i >= 0; --i) {
        if (!S.contains(small[i] - p.ell)) { p.s_tilde = small[i]; break; }
    }
    p.is_acute = p.d_prime.has_value() && (p.c - p.d <= p.c_sub - *p.d_prime);
    return p;
}

std::vector<long long> apery_set(const NumericalSemigroup& S, long long n) {
    if (n <= 0 || !S.contains(n)) throw std::invalid_argument("not a member");
    std::vector<long long> ap(static_cast<size_t>(n), -1);
    long long found = 0;
    for (long long x = 0; found < n; ++x) {
        if (!S.contains(x)) continue;
        long long r = x % n;
        if (ap[r] == -1) { ap[r] = x; ++found; }
    }
    return ap;
}

SequenceClassification classify_sequence(const NumericalSemigroup& S) {
    SequenceClassification out;
    const auto& m = S.min_generators();
    const size_t k = m.size();

    auto arithmetic_step = [](const std::vector<long long>& v) -> long long {
        if (v.size() < 2) return 0;
        long long d = v[1] - v[0];
        for (size_t i = 2; i < v.size(); ++i)
            if (v[i] - v[i - 1] != d) return 0;
        return d;
    };

    if (k >= 2) {
        long long d = arithmetic_step(m);
        if (d > 0) {
            out.kind = SequenceKind::Arithmetic;
            out.a = 1;
            out.d = d;
            return out;
        }
    }
    // Generalized arithmetic: m_i = a*m_0 + i*d for i >= 1, so the tail
    // m_1..m_k is arithmetic and d_tail divides consistently.
    if (k >= 3) {
        std::vector<long long> tail(m.begin() + 1, m.end());
        long long d = arithmetic_step(tail);
        if (d > 0 && (m[1] - d) % m[0] == 0) {
            long long a = (m[1] - d) / m[0];
            if (a >= 1) {
                out.kind = SequenceKind::GeneralizedArithmetic;
                out.a = a;
                out.d = d;
                return out;
            }
        }
    }
    // Almost arithmetic: deleting one generator leaves an arithmetic
    // sequence of length >= 2.
    if (k >= 3) {
        for (size_t skip = 0; skip < k; ++skip) {
            std::vector<long long> rest;
            for (size_t i = 0; i < k; ++i)
                if (i != skip) rest.push_back(m[i]);
            long long d = arithmetic_step(rest);
            if (d > 0) {
                out.kind = SequenceKind::AlmostArithmetic;
                out.a = 1;
                out.d = d;
                out.removed_index = static_cast<long long>(skip);
                return out;
            }
        }
    }
    return out;
}

namespace {

void genus_tree_visit(const NumericalSemigroup& S, long long g_max,
                      const std::function<void(const NumericalSemigroup&)>& visit) {
    visit(S);
    if (S.genus() >= g_max) return;
    const long long frob = S.frobenius();
    for (long long x : S.min_generators()) {
        if (x <= frob) continue;
        // Remove x: members below the new conductor x+1 are the old ones
        // except x itself.
        std::vector<long long> small;
        for (long long y : S.small_elements()) small.push_back(y);
        for (long long y = S.conductor(); y <= x; ++y)
            if (y != x) small.push_back(y);
        NumericalSemigroup child = NumericalSemigroup::from_small_elements(small, x + 1);
        genus_tree_visit(child, g_max, visit);
    }
}

}  // namespace

void enumerate_by_genus(long long g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
    if (g_max < 0) return;
    genus_tree_visit(NumericalSemigroup::naturals(), g_max, visit);
}

std::vector<NumericalSemigroup> all_semigroups_by_genus(long long g_max) {
    std::vector<NumericalSemigroup> out;
    enumerate_by_genus(g_max, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

NumericalSemigroup parse_semigroup_spec(const std::string& text) {
    auto parse_list = [](const std::string& s) {
        std::vector<long long> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("bad semigroup spec: " + s);
            out.push_back(std::stoll(item));
        }
        return out;
    };
    if (text.rfind("gen:", 0) == 0) {
        return NumericalSemigroup::from_generators(parse_list(text.substr(4)));
    }
    if (text.rfind("elem:", 0) == 0) {
        std::string rest = text.substr(5);
        auto semi = rest.find(';');
        if (semi == std::string::npos || rest.compare(semi, 3, ";c=") != 0)
            throw std::invalid_argument("bad semigroup spec: " + text);
        std::vector<long long> elems = parse_list(rest.substr(0, semi));
        long long c = std::stoll(rest.substr(semi + 3));
        return NumericalSemigroup::from_small_elements(elems, c);
    }
    throw std::invalid_argument("bad semigroup spec: " + text);
}

}  // namespace semicurve
