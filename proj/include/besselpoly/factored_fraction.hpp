#ifndef BESSELPOLY_FACTORED_FRACTION_HPP
#define BESSELPOLY_FACTORED_FRACTION_HPP

#include "besselpoly/polynomial.hpp"

#include <vector>

namespace besselpoly {

/// numerator / (prod_i x_i^{c_i} * prod_{i<j} (x_i - x_j)^{d_ij}).
///
/// The denominator is kept factored. Arithmetic combines operands over the
/// least common factored denominator; reduce() cancels factors that divide
/// the numerator exactly.
class FactoredFraction {
public:
    explicit FactoredFraction(int n = 0);
    explicit FactoredFraction(MultiPoly numerator);
    FactoredFraction(MultiPoly numerator, std::vector<int> var_pows, std::vector<int> pair_pows);

    int nvars() const { return n_; }
    const MultiPoly& numerator() const { return num_; }
    const std::vector<int>& var_pows() const { return var_pows_; }
    /// Row-major over pairs i<j (0-based): index of (i,j) is pair_index(n,i,j).
    const std::vector<int>& pair_pows() const { return pair_pows_; }
    int var_pow(int i) const { return var_pows_[static_cast<std::size_t>(i)]; }
    int pair_pow(int i, int j) const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    FactoredFraction& operator+=(const FactoredFraction& other);
    FactoredFraction& operator-=(const FactoredFraction& other);
    FactoredFraction& operator*=(const Rational& c);
    FactoredFraction& operator*=(const MultiPoly& p);
    friend FactoredFraction operator+(FactoredFraction a, const FactoredFraction& b) { return a += b; }
    friend FactoredFraction operator-(FactoredFraction a, const FactoredFraction& b) { return a -= b; }
    friend FactoredFraction operator*(FactoredFraction a, const Rational& c) { return a *= c; }
    friend FactoredFraction operator*(FactoredFraction a, const MultiPoly& p) { return a *= p; }
    friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b);

    /// Divide by x_i.
    FactoredFraction divided_by_var(int i) const;
    /// Divide by (x_i - x_j); i and j may appear in either order.
    FactoredFraction divided_by_difference(int i, int j) const;
    /// x_i * d/dx_i, quotient rule applied factor by factor.
    FactoredFraction euler(int i) const;

    /// Cancel every denominator factor that divides the numerator.
    FactoredFraction& reduce();
    /// Reduced polynomial value; throws NotDivisible if a denominator
    /// factor survives reduction.
    MultiPoly to_poly() const;

    /// Exact equality as rational functions.
    bool equals(const FactoredFraction& other) const;

private:
    // Scale the numerator up to the given (larger or equal) denominator.
    MultiPoly lifted(const std::vector<int>& vp, const std::vector<int>& pp) const;

    int n_;
    MultiPoly num_;
    std::vector<int> var_pows_;
    std::vector<int> pair_pows_;
};

int pair_index(int n, int i, int j);

} // namespace besselpoly

#endif
