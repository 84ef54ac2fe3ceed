#include "semicurve/algebra.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace semicurve {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<long long> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size())
        throw std::invalid_argument("ring names/weights mismatch");
}

PolyRingPtr make_x_ring(const std::vector<long long>& weights) {
    std::vector<std::string> names;
    for (size_t i = 0; i < weights.size(); ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<PolyRing>(names, weights);
}

void SparsePolynomial::require_same_ring(const SparsePolynomial& o) const {
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
        throw std::invalid_argument("incompatible rings");
}

SparsePolynomial SparsePolynomial::monomial(PolyRingPtr ring, std::vector<int> exps, BigInt coeff) {
    SparsePolynomial p(std::move(ring));
    if (exps.size() != p.ring_->nvars())
        throw std::invalid_argument("exponent tuple length mismatch");
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

SparsePolynomial SparsePolynomial::variable(PolyRingPtr ring, size_t i, int power) {
    std::vector<int> e(ring->nvars(), 0);
    e[i] = power;
    return monomial(std::move(ring), std::move(e), 1);
}

SparsePolynomial SparsePolynomial::constant(PolyRingPtr ring, BigInt value) {
    std::vector<int> e(ring->nvars(), 0);
    return monomial(std::move(ring), std::move(e), std::move(value));
}

void SparsePolynomial::add_term(const std::vector<int>& exps, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    require_same_ring(o);
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    require_same_ring(o);
    SparsePolynomial out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SparsePolynomial SparsePolynomial::scale(const BigInt& k) const {
    SparsePolynomial out(ring_);
    if (k == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    require_same_ring(o);
    SparsePolynomial out(ring_);
    std::vector<int> e(ring_->nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePolynomial SparsePolynomial::partial_derivative(size_t i) const {
    SparsePolynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        std::vector<int> d = e;
        d[i] -= 1;
        out.add_term(d, c * e[i]);
    }
    return out;
}

long long SparsePolynomial::weighted_degree_of(const std::vector<int>& exps) const {
    long long deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) deg += static_cast<long long>(exps[i]) * ring_->weight(i);
    return deg;
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long long deg = weighted_degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (weighted_degree_of(e) != deg) return false;
    return true;
}

long long SparsePolynomial::weighted_degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of zero polynomial");
    if (!is_homogeneous()) throw std::invalid_argument("inhomogeneous polynomial");
    return weighted_degree_of(terms_.begin()->first);
}

int SparsePolynomial::total_degree_in(const std::vector<size_t>& vars) const {
    int best = 0;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (size_t v : vars) d += e[v];
        best = std::max(best, d);
    }
    return best;
}

SparsePolynomial SparsePolynomial::substitute_variables(
    PolyRingPtr target, const std::vector<std::pair<size_t, int>>& images) const {
    if (images.size() != ring_->nvars())
        throw std::invalid_argument("substitution map arity mismatch");
    SparsePolynomial out(target);
    std::vector<int> e(target->nvars());
    for (const auto& [exps, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        BigInt coeff = c;
        bool dead = false;
        for (size_t i = 0; i < exps.size() && !dead; ++i) {
            if (exps[i] == 0) continue;
            auto [j, s] = images[i];
            if (s == 0) { dead = true; break; }
            e[j] += exps[i];
            if (s < 0 && (exps[i] & 1)) coeff = -coeff;
        }
        if (!dead) out.add_term(e, coeff);
    }
    return out;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest exponent tuple first, matching hand-written binomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << ring_->name(i);
            if (e[i] > 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) os << a;
        else if (a == 1) os << vars.str();
        else os << a << "*" << vars.str();
    }
    return os.str();
}

ToricPoly toric_substitute(const SparsePolynomial& p) {
    ToricPoly out;
    for (const auto& [e, c] : p.terms()) {
        long long d = p.weighted_degree_of(e);
        auto it = out.find(d);
        if (it == out.end()) out.emplace(d, c);
        else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::string toric_to_string(const ToricPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p) {
        if (!first) os << " + ";
        first = false;
        os << c << "*t^" << d;
    }
    return os.str();
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::select(const std::vector<size_t>& row_idx,
                                      const std::vector<size_t>& col_idx) const {
    RationalMatrix m(row_idx.size(), col_idx.size());
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

long long rational_rank(const RationalMatrix& m) {
    const size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    // Clear denominators row by row, then run Bareiss.  Intermediate values
    // stay integral; the exact-division check guards the invariant.
    std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
    for (size_t i = 0; i < R; ++i) {
        BigInt lcm = 1;
        for (size_t j = 0; j < C; ++j) {
            BigInt den = denominator(m.at(i, j));
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (size_t j = 0; j < C; ++j) {
            BigRat v = m.at(i, j) * lcm;
            a[i][j] = numerator(v);
        }
    }
    size_t rank = 0;
    BigInt prev = 1;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t pivot = rank;
        while (pivot < R && a[pivot][col] == 0) ++pivot;
        if (pivot == R) continue;
        std::swap(a[rank], a[pivot]);
        for (size_t i = rank + 1; i < R; ++i) {
            for (size_t j = col + 1; j < C; ++j) {
                BigInt num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                BigInt q, rem;
                divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("Bareiss division not exact");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

std::vector<std::vector<BigInt>> nullspace_basis(const RationalMatrix& m) {
    const size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<BigRat>> a(R, std::vector<BigRat>(C));
    for (size_t i = 0; i < R; ++i)
        for (size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);

    // Gauss-Jordan to reduced row echelon form.
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t p = row;
        while (p < R && a[p][col] == 0) ++p;
        if (p == R) continue;
        std::swap(a[row], a[p]);
        BigRat inv = a[row][col];
        for (size_t j = col; j < C; ++j) a[row][j] /= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || a[i][col] == 0) continue;
            BigRat f = a[i][col];
            for (size_t j = col; j < C; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<BigInt>> basis;
    for (size_t free_col = 0; free_col < C; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRat> v(C, BigRat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][free_col];
        // Clear denominators, strip content, make the first nonzero positive.
        BigInt lcm = 1;
        for (const auto& x : v) {
            BigInt den = denominator(x);
            lcm = lcm / gcd(lcm, den) * den;
        }
        std::vector<BigInt> w(C);
        BigInt content = 0;
        for (size_t j = 0; j < C; ++j) {
            BigRat scaled = v[j] * lcm;
            w[j] = numerator(scaled);
            content = gcd(content, w[j]);
        }
        if (content > 1)
            for (auto& x : w) x /= content;
        for (const auto& x : w) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : w) y = -y;
            break;
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<SparsePolynomial> mat_vec(const PolyMatrix& r, const std::vector<SparsePolynomial>& f) {
    std::vector<SparsePolynomial> out;
    for (const auto& row : r) {
        if (row.size() != f.size()) throw std::invalid_argument("matrix/vector size mismatch");
        SparsePolynomial acc(f.empty() ? row[0].ring() : f[0].ring());
        for (size_t j = 0; j < f.size(); ++j) acc = acc + row[j] * f[j];
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace semicurve
