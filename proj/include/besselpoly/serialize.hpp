#ifndef BESSELPOLY_SERIALIZE_HPP
#define BESSELPOLY_SERIALIZE_HPP

#include "besselpoly/bessel.hpp"
#include "besselpoly/orthogonality.hpp"

#include "json.hpp"

namespace besselpoly {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const SymPoly& f);
Json to_json(const JackExpansion& v);

/// lambda, kappa, n, monomial coefficients, hook products and P_lambda(1^n).
Json jack_to_json(const Partition& lambda, const Rational& kappa, int n);

/// lambda, a, kappa, n, jack_coeffs, monomial_coeffs, eigenvalue.
Json bessel_to_json(const BesselPolynomial& y);

/// Rows of rational strings together with the basis and the scale descriptor.
Json gram_to_json(const GramMatrix& gram, const BesselParams& p);

Json moments_to_json(const MomentTable2& table);

} // namespace besselpoly

#endif
