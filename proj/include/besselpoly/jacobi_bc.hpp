#ifndef BESSELPOLY_JACOBI_BC_HPP
#define BESSELPOLY_JACOBI_BC_HPP

#include "besselpoly/bessel.hpp"
#include "besselpoly/differential.hpp"

namespace besselpoly {

struct JacobiParams {
    Rational k1;
    Rational k2;
    Rational k3;
    int n = 1;
};

/// rho_i = k3 (n - i) + (k1 + 2 k2)/2.
std::vector<Rational> rho_bc(const JacobiParams& jp);

/// d_lambda (with kappa = k3) + (k1 + 2 k2 + 1)|lambda|.
Rational jacobi_eigenvalue(const Partition& lambda, const JacobiParams& jp);

/// The operator in the t-variables as a second-order operator:
/// A = C = t^2 - t, B = (k1 + 2 k2 + 1) t - (k1 + k2 + 1/2), kappa = k3.
SecondOrderOperator jacobi_operator(const JacobiParams& jp);

SymPoly apply_DBC_direct(const SymPoly& f, const JacobiParams& jp);

/// D_2 - D_1 + (k1 + 2 k2 + 1) E_1 - (k1 + k2 + 1/2) E_0 in the Jack basis.
JackExpansion apply_DBC_jack(const JackExpansion& v, const JacobiParams& jp);

/// Eigenfunction with leading coefficient (-4)^|lambda| on P_lambda, by the
/// triangular recurrence. Throws DegenerateEigenvalue.
JackExpansion jacobi_expand(const Partition& lambda, const JacobiParams& jp);

/// 4^|lambda| times the shift ratio of the BC Delta_+ function at rho.
Rational jacobi_constant_term(const Partition& lambda, const JacobiParams& jp);

/// k1 = (a - 1 + 2E)/2, k2 = (a - 1 - 2E)/4, k3 = kappa.
JacobiParams limit_params(const Rational& a, const Rational& kappa, const Rational& E, int n);

} // namespace besselpoly

#endif
