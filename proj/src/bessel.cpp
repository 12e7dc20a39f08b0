#include "besselpoly/bessel.hpp"

#include "besselpoly/errors.hpp"
#include "besselpoly/pieri_norms.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace besselpoly {

std::vector<Rational> rho_vector(const BesselParams& p)
{
    std::vector<Rational> rho;
    rho.reserve(static_cast<std::size_t>(p.n));
    for (int i = 1; i <= p.n; ++i)
        rho.emplace_back(p.kappa * (p.n - i) + (p.a - 1) / 2);
    return rho;
}

Rational bessel_eigenvalue(const Partition& lambda, const BesselParams& p)
{
    return eigenvalue_d(lambda, p.kappa, p.n) + p.a * lambda.weight();
}

NondegeneracyReport check_nondegenerate(const Partition& lambda, const BesselParams& p)
{
    NondegeneracyReport report;
    const Rational e = bessel_eigenvalue(lambda, p);
    for (const auto& mu : subpartitions(lambda)) {
        if (mu == lambda)
            continue;
        if (bessel_eigenvalue(mu, p) == e) {
            report.nondegenerate = false;
            report.collision = mu;
            break;
        }
    }
    report.sufficient_condition = p.kappa >= 0 && p.a < -2 * (lambda.weight() + p.kappa * (p.n - 1)) + 1;
    return report;
}

namespace {

using CacheKey = std::tuple<Partition, Rational, Rational, int>;

std::mutex bessel_mutex;
std::map<CacheKey, BesselPolynomial> bessel_cache;

int removed_row(const Partition& from, const Partition& to)
{
    for (int i = 0; i < from.length(); ++i)
        if (from[static_cast<std::size_t>(i)] != to[static_cast<std::size_t>(i)])
            return i + 1;
    throw std::logic_error("chain step removes no box");
}

} // namespace

const BesselPolynomial& bessel_expand(const Partition& lambda, const BesselParams& p)
{
    if (lambda.length() > p.n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    CacheKey key{lambda, p.a, p.kappa, p.n};
    {
        std::lock_guard lock(bessel_mutex);
        auto it = bessel_cache.find(key);
        if (it != bessel_cache.end())
            return it->second;
    }

    const Rational e_lambda = bessel_eigenvalue(lambda, p);
    JackExpansion u(p.n, p.kappa);
    u.add_term(lambda, 1);
    // subpartitions() is graded ascending; walk it backwards.
    auto subs = subpartitions(lambda);
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        const Partition& mu = *it;
        if (mu == lambda)
            continue;
        Rational rhs = 0;
        for (const auto& cc : co_covers(mu, p.n, Direction::Up)) {
            Rational upper = u.coeff(cc.partition);
            if (upper == 0)
                continue;
            rhs += spec_ratio_cocover(mu, cc.row, p.kappa, p.n) * binomial_cocover(mu, cc.row, p.kappa) * upper;
        }
        Rational gap = e_lambda - bessel_eigenvalue(mu, p);
        if (gap == 0)
            throw DegenerateEigenvalue("e_lambda = e_mu for lambda = " + to_string(lambda) + ", mu = "
                                       + to_string(mu));
        u.add_term(mu, 2 * rhs / gap);
    }

    BesselPolynomial value{lambda, p, std::move(u)};
    std::lock_guard lock(bessel_mutex);
    return bessel_cache.try_emplace(std::move(key), std::move(value)).first->second;
}

Rational bessel_coeff_tableau(const Partition& lambda, const Partition& mu, const BesselParams& p)
{
    const Rational d_lambda = eigenvalue_d(lambda, p.kappa, p.n);
    Rational total = 0;
    for (const auto& chain : skew_standard_chains(lambda, mu)) {
        Rational term = 1;
        for (std::size_t s = 1; s < chain.size(); ++s) {
            const Partition& prev = chain[s - 1];
            const Partition& cur = chain[s];
            int row = removed_row(prev, cur);
            Rational den = p.a * static_cast<long>(s) + d_lambda - eigenvalue_d(cur, p.kappa, p.n);
            if (den == 0)
                throw DegenerateEigenvalue("zero denominator along a chain from " + to_string(lambda) + " to "
                                           + to_string(mu));
            term *= spec_ratio_cocover(cur, row, p.kappa, p.n) * binomial_cocover(cur, row, p.kappa) / den;
        }
        total += term;
    }
    return total * pow(Rational(2), lambda.weight() - mu.weight());
}

BesselPolynomial renormalize(const BesselPolynomial& y)
{
    Rational ratio = delta_ratio(Sign::Plus, y.lambda, y.params);
    if (ratio == 0)
        throw PoleError("vanishing normalization ratio for " + to_string(y.lambda));
    BesselPolynomial out = y;
    out.jack_coeffs *= pow(Rational(2), -y.lambda.weight()) / ratio;
    return out;
}

BesselPolynomial rectangular_2F0(int k, const BesselParams& p, Reading reading)
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    const Partition rect = rectangle(k, p.n);
    const bool corrected = reading == Reading::Corrected;
    const Rational shift = p.kappa * (p.n - 1);
    const Rational alpha2 = corrected ? Rational(k + p.a - 1 + shift) : Rational(k + p.a - 1 - shift);
    const Rational minus_k(-k);
    Rational den = gen_pochhammer(minus_k, rect, p.kappa) * gen_pochhammer(alpha2, rect, p.kappa);
    if (den == 0)
        throw PoleError("vanishing Pochhammer symbol in the rectangular constant");
    Rational c = hook_products(rect, p.kappa).lower / den;
    if (corrected)
        c *= pow(Rational(-2), k * p.n);
    JackExpansion series = hyperg_trunc({minus_k, alpha2}, {}, Rational(-1, 2), p.kappa, p.n, k * p.n);
    series *= c;
    return BesselPolynomial{rect, p, std::move(series)};
}

std::vector<BesselParams> sample_params()
{
    return {
        {Rational(-20), Rational(1), 2},
        {Rational(-20), Rational(2), 3},
        {Rational(-31, 2), Rational(5, 3), 2},
    };
}

} // namespace besselpoly
