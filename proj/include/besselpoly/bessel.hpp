#ifndef BESSELPOLY_BESSEL_HPP
#define BESSELPOLY_BESSEL_HPP

#include "besselpoly/jack.hpp"

#include <optional>
#include <vector>

namespace besselpoly {

/// Parameters of the Bessel operator; the second-order coefficient b is 2.
struct BesselParams {
    Rational a;
    Rational kappa;
    int n = 1;
};

/// rho_i = kappa (n - i) + (a - 1)/2 for i = 1..n.
std::vector<Rational> rho_vector(const BesselParams& p);

/// e_lambda = d_lambda + a |lambda|.
Rational bessel_eigenvalue(const Partition& lambda, const BesselParams& p);

struct NondegeneracyReport {
    bool nondegenerate = true;
    /// kappa >= 0 and a < -2(|lambda| + kappa (n - 1)) + 1.
    bool sufficient_condition = false;
    /// First contained partition with a colliding eigenvalue, if any.
    std::optional<Partition> collision;
};

NondegeneracyReport check_nondegenerate(const Partition& lambda, const BesselParams& p);

struct BesselPolynomial {
    Partition lambda;
    BesselParams params;
    JackExpansion jack_coeffs;

    SymPoly monomials() const { return from_jack(jack_coeffs); }
    Rational constant_term() const { return jack_coeffs.coeff(Partition{}); }
};

/// Y_lambda from the eigenvalue recurrence, filled by decreasing weight.
/// Cached per (lambda, a, kappa, n). Throws DegenerateEigenvalue.
const BesselPolynomial& bessel_expand(const Partition& lambda, const BesselParams& p);

/// u_{lambda mu} as a sum over standard tableaux of shape lambda/mu.
Rational bessel_coeff_tableau(const Partition& lambda, const Partition& mu, const BesselParams& p);

/// Scale with unit constant term: 2^{-|lambda|} / delta_ratio(+, lambda).
BesselPolynomial renormalize(const BesselPolynomial& y);

/// Y_{(k^n)} as a constant times a terminating 2F0 with argument -x/2.
/// The literal reading uses the second parameter k + a - 1 - kappa (n - 1)
/// and drops the (-2)^{kn} factor from the constant.
BesselPolynomial rectangular_2F0(int k, const BesselParams& p, Reading reading = Reading::Corrected);

/// The default sample parameter sets (a, kappa, n).
std::vector<BesselParams> sample_params();

} // namespace besselpoly

#endif
