#include "besselpoly/serialize.hpp"

#include <string>

namespace besselpoly {

namespace {

template <class Map>
Json coefficient_object(const Map& coeffs)
{
    Json out = Json::object();
    for (const auto& [mu, c] : coeffs)
        out[to_string(mu)] = to_string(c);
    return out;
}

} // namespace

Json to_json(const Partition& lambda)
{
    Json out = Json::array();
    for (int part : lambda.parts())
        out.push_back(part);
    return out;
}

Json to_json(const SymPoly& f)
{
    return coefficient_object(f.coeffs());
}

Json to_json(const JackExpansion& v)
{
    return coefficient_object(v.coeffs);
}

Json jack_to_json(const Partition& lambda, const Rational& kappa, int n)
{
    const HookProducts h = hook_products(lambda, kappa);
    Json out;
    out["lambda"] = to_json(lambda);
    out["kappa"] = to_string(kappa);
    out["n"] = n;
    out["monomial_coeffs"] = to_json(jack_in_monomials(lambda, kappa, n));
    out["hook_lower"] = to_string(h.lower);
    out["hook_upper"] = to_string(h.upper);
    out["principal_specialization"] = to_string(principal_spec(lambda, kappa, n));
    return out;
}

Json bessel_to_json(const BesselPolynomial& y)
{
    Json out;
    out["lambda"] = to_json(y.lambda);
    out["a"] = to_string(y.params.a);
    out["kappa"] = to_string(y.params.kappa);
    out["n"] = y.params.n;
    out["jack_coeffs"] = to_json(y.jack_coeffs);
    out["monomial_coeffs"] = to_json(y.monomials());
    out["eigenvalue"] = to_string(bessel_eigenvalue(y.lambda, y.params));
    return out;
}

Json gram_to_json(const GramMatrix& gram, const BesselParams& p)
{
    Json out;
    out["a"] = to_string(p.a);
    out["kappa"] = to_string(p.kappa);
    out["n"] = p.n;
    out["scale"] = reduced_scale;
    Json basis = Json::array();
    for (const auto& lambda : gram.basis)
        basis.push_back(to_json(lambda));
    out["basis"] = std::move(basis);
    Json rows = Json::array();
    for (const auto& row : gram.entries) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(to_string(x));
        rows.push_back(std::move(r));
    }
    out["entries"] = std::move(rows);
    return out;
}

Json moments_to_json(const MomentTable2& table)
{
    Json out;
    out["a"] = to_string(table.a());
    out["kappa"] = to_string(table.kappa());
    out["max_degree"] = table.max_degree();
    Json values = Json::object();
    for (const auto& [key, v] : table.values())
        values["I(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = to_string(v);
    out["moments"] = std::move(values);
    return out;
}

} // namespace besselpoly
