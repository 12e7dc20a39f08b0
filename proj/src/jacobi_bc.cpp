#include "besselpoly/jacobi_bc.hpp"

#include "besselpoly/errors.hpp"
#include "besselpoly/pieri_norms.hpp"
#include "shift_product.hpp"

#include <stdexcept>

namespace besselpoly {

namespace {

void check_length(const Partition& lambda, int n)
{
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
}

Rational first_order_constant(const JacobiParams& jp)
{
    return jp.k1 + jp.k2 + Rational(1, 2);
}

Rational linear_coefficient(const JacobiParams& jp)
{
    return jp.k1 + 2 * jp.k2 + 1;
}

} // namespace

std::vector<Rational> rho_bc(const JacobiParams& jp)
{
    std::vector<Rational> rho;
    for (int i = 1; i <= jp.n; ++i)
        rho.push_back(jp.k3 * (jp.n - i) + (jp.k1 + 2 * jp.k2) / 2);
    return rho;
}

Rational jacobi_eigenvalue(const Partition& lambda, const JacobiParams& jp)
{
    check_length(lambda, jp.n);
    return eigenvalue_d(lambda, jp.k3, jp.n) + linear_coefficient(jp) * lambda.weight();
}

SecondOrderOperator jacobi_operator(const JacobiParams& jp)
{
    return {{0, -1, 1}, {-first_order_constant(jp), linear_coefficient(jp)}, {0, -1, 1}, jp.k3};
}

SymPoly apply_DBC_direct(const SymPoly& f, const JacobiParams& jp)
{
    if (f.nvars() != jp.n)
        throw std::invalid_argument("polynomial and parameters disagree on n");
    return apply_direct(jacobi_operator(jp), f);
}

JackExpansion apply_DBC_jack(const JackExpansion& v, const JacobiParams& jp)
{
    if (v.n != jp.n || v.kappa != jp.k3)
        throw std::invalid_argument("expansion and parameters disagree");
    JackExpansion out = apply_basic(BasicOperator::D2, v);
    out -= apply_basic(BasicOperator::D1, v);
    out += apply_basic(BasicOperator::E1, v) * linear_coefficient(jp);
    out -= apply_basic(BasicOperator::E0, v) * first_order_constant(jp);
    return out;
}

JackExpansion jacobi_expand(const Partition& lambda, const JacobiParams& jp)
{
    check_length(lambda, jp.n);
    const Rational e = jacobi_eigenvalue(lambda, jp);
    JackExpansion out(jp.n, jp.k3);
    JackExpansion pending(jp.n, jp.k3);
    pending.add_term(lambda, pow(Rational(-4), lambda.weight()));
    const auto below = subpartitions(lambda);
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
        const Partition& mu = *it;
        Rational c = pending.coeff(mu);
        if (mu != lambda) {
            const Rational gap = e - jacobi_eigenvalue(mu, jp);
            if (gap == 0) {
                if (c != 0)
                    throw DegenerateEigenvalue("eigenvalue of " + to_string(mu) + " coincides with that of "
                                               + to_string(lambda));
                continue;
            }
            c /= gap;
        }
        if (c == 0)
            continue;
        out.add_term(mu, c);
        JackExpansion single(jp.n, jp.k3);
        single.add_term(mu, c);
        JackExpansion image = apply_DBC_jack(single, jp);
        image.coeffs.erase(mu);
        pending += image;
    }
    return out;
}

Rational jacobi_constant_term(const Partition& lambda, const JacobiParams& jp)
{
    check_length(lambda, jp.n);
    const auto z = rho_bc(jp);
    const auto parts = lambda.padded(jp.n);
    const Rational shift_a = (jp.k1 + 2 * jp.k2) / 2;
    const Rational shift_b = (jp.k1 + 1) / 2;
    auto v = [&](const Rational& x) { return v_hat(x, jp.k3); };
    auto w = [&](const Rational& x) {
        Rational den = 2 * x * (2 * x + 1);
        if (den == 0)
            throw PoleError("pole of the BC coefficient function at " + to_string(x));
        return Rational((shift_a + x) * (shift_b + x) / den);
    };
    Rational ratio = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            ratio *= detail::shift_product(v, Rational(z[i] - z[j]), parts[i] - parts[j]);
            ratio *= detail::shift_product(v, Rational(z[i] + z[j]), parts[i] + parts[j]);
        }
        ratio *= detail::shift_product(w, z[i], parts[i]);
    }
    return pow(Rational(4), lambda.weight()) * ratio;
}

JacobiParams limit_params(const Rational& a, const Rational& kappa, const Rational& E, int n)
{
    if (E <= 0)
        throw std::invalid_argument("E must be positive");
    return {(a - 1 + 2 * E) / 2, (a - 1 - 2 * E) / 4, kappa, n};
}

} // namespace besselpoly
