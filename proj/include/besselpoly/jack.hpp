#ifndef BESSELPOLY_JACK_HPP
#define BESSELPOLY_JACK_HPP

#include "besselpoly/polynomial.hpp"

#include <map>
#include <vector>

namespace besselpoly {

/// Coefficients in the monic Jack basis {P_mu} at fixed n and kappa.
struct JackExpansion {
    using CoeffMap = std::map<Partition, Rational, GradedPartitionLess>;

    int n = 0;
    Rational kappa;
    CoeffMap coeffs;

    JackExpansion() = default;
    JackExpansion(int n_, Rational kappa_) : n(n_), kappa(std::move(kappa_)) {}

    Rational coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const Rational& c);
    bool is_zero() const { return coeffs.empty(); }

    JackExpansion& operator+=(const JackExpansion& other);
    JackExpansion& operator-=(const JackExpansion& other);
    JackExpansion& operator*=(const Rational& c);
    friend JackExpansion operator+(JackExpansion a, const JackExpansion& b) { return a += b; }
    friend JackExpansion operator-(JackExpansion a, const JackExpansion& b) { return a -= b; }
    friend JackExpansion operator*(JackExpansion a, const Rational& c) { return a *= c; }
    bool operator==(const JackExpansion& other) const = default;
};

/// d_lambda = sum_i lambda_i (lambda_i - 1 + 2 kappa (n - i)).
Rational eigenvalue_d(const Partition& lambda, const Rational& kappa, int n);

struct HookProducts {
    Rational lower; // h_lambda
    Rational upper; // h^lambda
};

HookProducts hook_products(const Partition& lambda, const Rational& kappa);

/// P_lambda in the monomial basis. Cached per (lambda, kappa, n); the cache is
/// shared between threads.
const SymPoly& jack_in_monomials(const Partition& lambda, const Rational& kappa, int n);

/// D_2 applied to m_mu, in the monomial basis (cached).
const SymPoly& jack_D2_on_monomial(const Partition& mu, const Rational& kappa, int n);

/// P_lambda(1^n) from the hook-product formula.
Rational principal_spec(const Partition& lambda, const Rational& kappa, int n);

/// Pieri coefficient of P_{lambda + e_row} in p_1 P_lambda (row is 1-based).
Rational psi_prime(const Partition& lambda, int row, const Rational& kappa);

/// binom(lambda^(row), lambda) = psi' h_{lambda^(row)} / h_lambda.
Rational binomial_cocover(const Partition& lambda, int row, const Rational& kappa);

enum class Reading { Literal, Corrected };

/// Closed product for binom(lambda^(row), lambda). The corrected reading uses
/// l = length(lambda^(row)) and restricts the product to j <= l; the literal
/// one uses length(lambda) and j = 1..n.
Rational binomial_cocover_closed(const Partition& lambda, int row, const Rational& kappa, int n, Reading reading);

/// binom(lambda^(row), lambda) read off from the E_0 action on P_{lambda^(row)}.
Rational binomial_from_E0(const Partition& lambda, int row, const Rational& kappa, int n);

/// P_{lambda^(row)}(1^n) / P_lambda(1^n); zero when lambda^(row) is longer than n.
Rational spec_ratio_cocover(const Partition& lambda, int row, const Rational& kappa, int n);

/// Closed product for the same ratio. The literal reading keeps the leading
/// kappa and runs the j > i product to n; it throws PoleError where it
/// divides by zero.
Rational spec_ratio_closed(const Partition& lambda, int row, const Rational& kappa, int n, Reading reading);

/// Conversions between the monomial and Jack bases.
JackExpansion to_jack(const SymPoly& f, const Rational& kappa);
SymPoly from_jack(const JackExpansion& v);

enum class BasicOperator { E0, E1, D1, D2, MulP1 };

/// Action of E_0, E_1, D_1, D_2 or multiplication by p_1 in the Jack basis.
JackExpansion apply_basic(BasicOperator op, const JackExpansion& v);

/// [alpha]^(kappa)_lambda = prod_i [alpha - kappa (i - 1)]_{lambda_i}.
Rational gen_pochhammer(const Rational& alpha, const Partition& lambda, const Rational& kappa);

/// Truncated pFq: sum over |lambda| <= maxdeg of
/// prod [upper]_lambda / prod [lower]_lambda * scale^|lambda| * P_lambda / h_lambda.
JackExpansion hyperg_trunc(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                           const Rational& scale, const Rational& kappa, int n, int maxdeg);

} // namespace besselpoly

#endif
