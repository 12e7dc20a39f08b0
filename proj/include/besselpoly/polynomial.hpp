#ifndef BESSELPOLY_POLYNOMIAL_HPP
#define BESSELPOLY_POLYNOMIAL_HPP

#include "besselpoly/partition.hpp"
#include "besselpoly/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace besselpoly {

using Exponent = std::vector<int>;

/// Graded lexicographic monomial order: total degree first, then
/// lexicographic with x_1 > x_2 > ... > x_n. The largest key is the leading
/// monomial.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in n variables over Rational. Zero coefficients are
/// never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GradedLex>;

    explicit MultiPoly(int n = 0) : n_(n) {}

    static MultiPoly constant(int n, const Rational& c);
    /// The single variable x_i (0-based i).
    static MultiPoly variable(int n, int i);
    static MultiPoly monomial(const Exponent& e, const Rational& c = Rational(1));

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const; // -1 for the zero polynomial

    Rational coeff(const Exponent& e) const;
    /// Adds c to the coefficient of x^e, erasing it if it cancels.
    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& other) const = default;

    /// Multiply by the monomial x^shift.
    MultiPoly shifted(const Exponent& shift) const;
    MultiPoly derivative(int i) const;
    /// x_i * d/dx_i.
    MultiPoly euler(int i) const;
    MultiPoly pow(int k) const;
    Rational evaluate(std::span<const Rational> point) const;
    /// Image under the variable permutation x_i -> x_{perm[i]}.
    MultiPoly permuted(std::span<const int> perm) const;

private:
    void check_same(const MultiPoly& other) const;

    int n_;
    TermMap terms_;
};

/// Quotient q with f = q*g. Throws NotDivisible if the remainder is non-zero
/// and std::invalid_argument if g is zero or the variable counts differ.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

/// x_i - x_j as a polynomial (0-based indices).
MultiPoly variable_difference(int n, int i, int j);

/// Symmetric polynomial in the monomial basis m_lambda, lambda of length <= n.
class SymPoly {
public:
    using CoeffMap = std::map<Partition, Rational, GradedPartitionLess>;

    explicit SymPoly(int n = 0) : n_(n) {}
    SymPoly(int n, CoeffMap coeffs);

    static SymPoly monomial(int n, const Partition& lambda, const Rational& c = Rational(1));

    int nvars() const { return n_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;
    Rational coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& c);

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    SymPoly& operator*=(const Rational& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
    /// Product via expansion and re-collection.
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    bool operator==(const SymPoly& other) const = default;

    /// Constant term (coefficient of m_(0)).
    Rational constant_term() const { return coeff(Partition{}); }

private:
    int n_;
    CoeffMap coeffs_;
};

/// The monomial symmetric polynomial m_lambda as an explicit polynomial.
MultiPoly monomial_symmetric(const Partition& lambda, int n);

MultiPoly expand(const SymPoly& f);

/// Monomial-basis coefficients of a symmetric polynomial. Throws NotSymmetric
/// if some permutation orbit carries inconsistent coefficients.
SymPoly collect_symmetric(const MultiPoly& f);

/// Elementary symmetric polynomial e_r = m_(1^r), 0 <= r <= n.
SymPoly elementary(int r, int n);

/// Power sum p_r, r >= 1.
SymPoly power_sum(int r, int n);

/// Value at (1,...,1): sum of coefficients times orbit sizes.
Rational evaluate_at_ones(const SymPoly& f);

/// Number of distinct permutations of lambda padded to n entries.
long orbit_size(const Partition& lambda, int n);

} // namespace besselpoly

#endif
