#ifndef BESSELPOLY_DIFFERENTIAL_HPP
#define BESSELPOLY_DIFFERENTIAL_HPP

#include "besselpoly/polynomial.hpp"

#include <vector>

namespace besselpoly {

/// Univariate polynomial as a coefficient list, lowest degree first.
using UniPoly = std::vector<Rational>;

/// The operator
///   sum_i A(x_i) d_i^2 + sum_i B(x_i) d_i + 2 kappa sum_{i != j} C(x_i)/(x_i - x_j) d_i.
struct SecondOrderOperator {
    UniPoly A;
    UniPoly B;
    UniPoly C;
    Rational kappa;
};

/// Direct application. The pair terms are combined as
/// (C(x_i) d_i f - C(x_j) d_j f)/(x_i - x_j) and divided exactly, so f must
/// be symmetric (NotDivisible otherwise).
MultiPoly apply_direct(const SecondOrderOperator& op, const MultiPoly& f);

SymPoly apply_direct(const SecondOrderOperator& op, const SymPoly& f);

/// E_l = sum_i x_i^l d_i.
MultiPoly apply_E(int l, const MultiPoly& f);

/// D_k of the Jack theory (k = 1, 2).
SecondOrderOperator jack_operator_D(int k, const Rational& kappa);

} // namespace besselpoly

#endif
