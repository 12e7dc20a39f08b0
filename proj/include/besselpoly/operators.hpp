#ifndef BESSELPOLY_OPERATORS_HPP
#define BESSELPOLY_OPERATORS_HPP

#include "besselpoly/bessel.hpp"
#include "besselpoly/differential.hpp"

#include <map>
#include <vector>

namespace besselpoly {

/// The Bessel operator as a second-order operator with A = C = x^2, B = a x + 2.
SecondOrderOperator bessel_operator(const BesselParams& p);

SymPoly apply_DB_direct(const SymPoly& f, const BesselParams& p);

/// D^B in the Jack basis: D_2 + a E_1 + 2 E_0.
JackExpansion apply_DB_jack(const JackExpansion& v, const BesselParams& p);

/// Largest d accepted by apply_higher unless a bound is passed explicitly.
inline constexpr int default_d_max = 3;

/// The d-th commuting operator, built by 2d stages of the first-order
/// recursion on the 2n intermediates indexed by +i and -i. Each stage
/// asserts the parity relation between the two halves (NotSymmetric on
/// failure); the final half-sum must reduce to a symmetric polynomial.
SymPoly apply_higher(int d, const SymPoly& f, const BesselParams& p, int d_max = default_d_max);

/// Scalar e with apply_higher(d, Y_lambda) = e Y_lambda; NotProportional otherwise.
Rational eigenvalue_of(int d, const Partition& lambda, const BesselParams& p, int d_max = default_d_max);

/// Coefficient of m_lambda in D_d m_lambda. The operators are triangular on
/// the monomial basis, so this is the eigenvalue of Y_lambda without
/// constructing it.
Rational leading_eigenvalue(int d, const Partition& lambda, const BesselParams& p, int d_max = default_d_max);

/// (D_d D_e - D_e D_d) m_lambda = 0 for every |lambda| <= max_degree.
bool commutator_check(int d, int e, int max_degree, const BesselParams& p, int d_max = default_d_max);

struct GammaPolynomial {
    /// Coefficients of z^alpha, total degree <= 2d.
    std::map<std::vector<int>, Rational> coeffs;
    /// Invariant under sign changes and permutations of the variables.
    bool even_symmetric = false;
    /// Largest part allowed in the interpolation grid that was used.
    int box = 0;
};

/// The polynomial g of degree <= 2d with g(lambda + rho) = e_d(lambda) on all
/// partitions in a box, the box being enlarged until the interpolation
/// system has full rank. Throws DegenerateRecurrence if the samples are
/// inconsistent.
GammaPolynomial gamma_poly(int d, const BesselParams& p, int d_max = default_d_max);

/// Value of a coefficient map at a point.
Rational evaluate_gamma(const GammaPolynomial& g, const std::vector<Rational>& z);

/// True iff (e_1(lambda), ..., e_n(lambda)) are pairwise distinct over |lambda| <= max_degree.
bool separation_check(int max_degree, const BesselParams& p);

} // namespace besselpoly

#endif
