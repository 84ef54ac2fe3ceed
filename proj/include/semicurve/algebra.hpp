#ifndef SEMICURVE_ALGEBRA_HPP
#define SEMICURVE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semicurve {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Variable names and weights of a graded polynomial ring.  Rings are
/// immutable and shared; polynomials over different rings do not mix.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, std::vector<long long> weights);
    size_t nvars() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    long long weight(size_t i) const { return weights_[i]; }
    const std::vector<long long>& weights() const { return weights_; }
    bool same_as(const PolyRing& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<long long> weights_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ring x_0..x_k with weight(x_i) = weights[i].
PolyRingPtr make_x_ring(const std::vector<long long>& weights);

/// Exact integer-coefficient sparse multivariate polynomial with a
/// weighted grading.  No zero coefficients are stored.
class SparsePolynomial {
public:
    explicit SparsePolynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static SparsePolynomial monomial(PolyRingPtr ring, std::vector<int> exps, BigInt coeff);
    static SparsePolynomial variable(PolyRingPtr ring, size_t i, int power = 1);
    static SparsePolynomial constant(PolyRingPtr ring, BigInt value);

    const PolyRingPtr& ring() const { return ring_; }
    const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial scale(const BigInt& k) const;

    SparsePolynomial partial_derivative(size_t i) const;

    long long weighted_degree_of(const std::vector<int>& exps) const;
    /// Common weighted degree of all terms, or throws for inhomogeneous.
    long long weighted_degree() const;
    bool is_homogeneous() const;

    /// Total degree in the listed variables (max over terms).
    int total_degree_in(const std::vector<size_t>& vars) const;

    void add_term(const std::vector<int>& exps, const BigInt& coeff);

    /// Mapping each variable to a (target variable, sign/zero) pair; used to
    /// merge or kill deformation parameters.  `images[i] = {j, s}` sends
    /// var i to s * var j; s == 0 kills the variable.
    SparsePolynomial substitute_variables(PolyRingPtr target,
                                          const std::vector<std::pair<size_t, int>>& images) const;

    std::string to_string() const;

    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

private:
    void require_same_ring(const SparsePolynomial& o) const;
    PolyRingPtr ring_;
    std::map<std::vector<int>, BigInt> terms_;
};

/// Exact univariate polynomial in t, as exponent -> coefficient.
using ToricPoly = std::map<long long, BigInt>;

/// The substitution x_i -> t^{weight(x_i)}.  A polynomial lies in the toric
/// ideal of the weight semigroup iff the result is zero.
ToricPoly toric_substitute(const SparsePolynomial& p);

std::string toric_to_string(const ToricPoly& p);

/// Dense exact rational matrix.
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigRat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const BigRat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    RationalMatrix select(const std::vector<size_t>& row_idx,
                          const std::vector<size_t>& col_idx) const;

private:
    size_t rows_, cols_;
    std::vector<BigRat> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the integerized
/// matrix; intermediate divisions are checked to be exact.
long long rational_rank(const RationalMatrix& m);

/// Nullspace basis as primitive integer tuples, first nonzero entry
/// positive, from the reduced row echelon form.
std::vector<std::vector<BigInt>> nullspace_basis(const RationalMatrix& m);

/// Matrices of polynomials (relation matrices, Jacobians).
using PolyMatrix = std::vector<std::vector<SparsePolynomial>>;

/// r * f for a p x q matrix and a length-q vector.
std::vector<SparsePolynomial> mat_vec(const PolyMatrix& r, const std::vector<SparsePolynomial>& f);

}  // namespace semicurve

#endif
