#include "besselpoly/jack.hpp"

#include "besselpoly/differential.hpp"
#include "besselpoly/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace besselpoly {

Rational JackExpansion::coeff(const Partition& mu) const
{
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void JackExpansion::add_term(const Partition& mu, const Rational& c)
{
    if (c == 0)
        return;
    if (mu.length() > n)
        throw std::invalid_argument("partition " + to_string(mu) + " is longer than n");
    auto [it, inserted] = coeffs.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs.erase(it);
    }
}

JackExpansion& JackExpansion::operator+=(const JackExpansion& other)
{
    if (n != other.n || kappa != other.kappa)
        throw std::invalid_argument("Jack expansions with different n or kappa");
    for (const auto& [mu, c] : other.coeffs)
        add_term(mu, c);
    return *this;
}

JackExpansion& JackExpansion::operator-=(const JackExpansion& other)
{
    if (n != other.n || kappa != other.kappa)
        throw std::invalid_argument("Jack expansions with different n or kappa");
    for (const auto& [mu, c] : other.coeffs)
        add_term(mu, -c);
    return *this;
}

JackExpansion& JackExpansion::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [mu, v] : coeffs)
        v *= c;
    return *this;
}

Rational eigenvalue_d(const Partition& lambda, const Rational& kappa, int n)
{
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    Rational d = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        int li = lambda[static_cast<std::size_t>(i - 1)];
        d += li * (li - 1 + 2 * kappa * (n - i));
    }
    return d;
}

HookProducts hook_products(const Partition& lambda, const Rational& kappa)
{
    Partition conj = conjugate(lambda);
    HookProducts h{Rational(1), Rational(1)};
    for (int i = 1; i <= lambda.length(); ++i) {
        int li = lambda[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= li; ++j) {
            int cj = conj[static_cast<std::size_t>(j - 1)];
            h.lower *= li - j + kappa * (cj - i) + 1;
            h.upper *= li - j + kappa * (cj - i + 1);
        }
    }
    return h;
}

namespace {

using CacheKey = std::tuple<Partition, Rational, int>;

std::mutex d2_mutex;
std::map<CacheKey, SymPoly> d2_cache;

std::mutex jack_mutex;
std::map<CacheKey, SymPoly> jack_cache;

Partition raised(const Partition& lambda, int row)
{
    Partition out;
    if (!add_box(lambda, row, out))
        throw std::invalid_argument("cannot add a box to row " + std::to_string(row) + " of " + to_string(lambda));
    return out;
}

int part(const Partition& lambda, int row)
{
    return lambda[static_cast<std::size_t>(row - 1)];
}

Rational checked_div(const Rational& num, const Rational& den, const char* what)
{
    if (den == 0)
        throw PoleError(std::string("zero denominator in ") + what);
    return num / den;
}

} // namespace

const SymPoly& jack_D2_on_monomial(const Partition& mu, const Rational& kappa, int n)
{
    CacheKey key{mu, kappa, n};
    {
        std::lock_guard lock(d2_mutex);
        auto it = d2_cache.find(key);
        if (it != d2_cache.end())
            return it->second;
    }
    SymPoly value = apply_direct(jack_operator_D(2, kappa), SymPoly::monomial(n, mu));
    std::lock_guard lock(d2_mutex);
    return d2_cache.try_emplace(std::move(key), std::move(value)).first->second;
}

const SymPoly& jack_in_monomials(const Partition& lambda, const Rational& kappa, int n)
{
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    CacheKey key{lambda, kappa, n};
    {
        std::lock_guard lock(jack_mutex);
        auto it = jack_cache.find(key);
        if (it != jack_cache.end())
            return it->second;
    }

    std::vector<Partition> below;
    for (auto& mu : partitions_of(lambda.weight(), n))
        if (dominance_leq(mu, lambda))
            below.push_back(std::move(mu));
    std::sort(below.begin(), below.end(), [](const Partition& x, const Partition& y) { return y < x; });

    const Rational d_lambda = eigenvalue_d(lambda, kappa, n);
    std::map<Partition, Rational> u;
    SymPoly value(n);
    for (const auto& nu : below) {
        Rational c;
        if (nu == lambda) {
            c = 1;
        } else {
            Rational rhs = 0;
            for (const auto& [mu, umu] : u)
                rhs += umu * jack_D2_on_monomial(mu, kappa, n).coeff(nu);
            Rational gap = d_lambda - jack_D2_on_monomial(nu, kappa, n).coeff(nu);
            if (gap == 0)
                throw DegenerateEigenvalue("d_lambda = d_mu for lambda = " + to_string(lambda) + ", mu = "
                                           + to_string(nu) + " at kappa = " + to_string(kappa));
            c = rhs / gap;
        }
        if (c != 0) {
            u.emplace(nu, c);
            value.add_term(nu, c);
        }
    }

    std::lock_guard lock(jack_mutex);
    return jack_cache.try_emplace(std::move(key), std::move(value)).first->second;
}

Rational principal_spec(const Partition& lambda, const Rational& kappa, int n)
{
    if (lambda.length() > n)
        return 0;
    if (kappa == 0)
        return evaluate_at_ones(SymPoly::monomial(n, lambda));
    Partition conj = conjugate(lambda);
    Rational num = 1, den = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        int li = part(lambda, i);
        for (int j = 1; j <= li; ++j) {
            num *= j - 1 + kappa * (n - i + 1);
            den *= li - j + kappa * (part(conj, j) - i + 1);
        }
    }
    return checked_div(num, den, "principal specialization");
}

Rational psi_prime(const Partition& lambda, int row, const Rational& kappa)
{
    raised(lambda, row);
    const int li = part(lambda, row);
    Rational value = 1;
    for (int j = 1; j < row; ++j) {
        int diff = li - part(lambda, j);
        value *= checked_div(kappa * (j - row + 1) + diff, kappa * (j - row) + diff, "psi'");
        value *= checked_div(kappa * (j - row - 1) + diff + 1, kappa * (j - row) + diff + 1, "psi'");
    }
    return value;
}

Rational binomial_cocover(const Partition& lambda, int row, const Rational& kappa)
{
    Partition up = raised(lambda, row);
    return checked_div(psi_prime(lambda, row, kappa) * hook_products(up, kappa).lower,
                       hook_products(lambda, kappa).lower, "binomial coefficient");
}

Rational binomial_cocover_closed(const Partition& lambda, int row, const Rational& kappa, int n, Reading reading)
{
    Partition up = raised(lambda, row);
    const int li = part(lambda, row);
    const bool corrected = reading == Reading::Corrected;
    const int len = corrected ? up.length() : lambda.length();
    const int jmax = corrected ? up.length() : n;
    Rational value = li + 1 + kappa * (len - row);
    for (int j = 1; j <= jmax; ++j) {
        if (j == row)
            continue;
        int diff = li - part(lambda, j);
        value *= checked_div(diff + 1 + kappa * (j - row - 1), diff + 1 + kappa * (j - row), "binomial product");
    }
    return value;
}

Rational spec_ratio_cocover(const Partition& lambda, int row, const Rational& kappa, int n)
{
    Partition up = raised(lambda, row);
    if (up.length() > n)
        return 0;
    return checked_div(principal_spec(up, kappa, n), principal_spec(lambda, kappa, n), "specialization ratio");
}

Rational spec_ratio_closed(const Partition& lambda, int row, const Rational& kappa, int n, Reading reading)
{
    Partition up = raised(lambda, row);
    const int li = part(lambda, row);
    const bool corrected = reading == Reading::Corrected;
    const int len = corrected ? up.length() : lambda.length();
    const int jmax = corrected ? up.length() : n;
    Rational value = checked_div(li + kappa * (n - row + 1), li + kappa * (len - row + 1), "specialization prefactor");
    if (!corrected)
        value *= kappa;
    for (int j = 1; j < row; ++j) {
        int diff = li - part(lambda, j);
        value *= checked_div(diff + 1 + kappa * (j - row), diff + 1 + kappa * (j - row - 1), "specialization product");
    }
    for (int j = row + 1; j <= jmax; ++j) {
        int diff = li - part(lambda, j);
        value *= checked_div(diff + kappa * (j - row + 1), diff + kappa * (j - row), "specialization product");
    }
    return value;
}

JackExpansion to_jack(const SymPoly& f, const Rational& kappa)
{
    const int n = f.nvars();
    JackExpansion out(n, kappa);
    SymPoly rest = f;
    while (!rest.is_zero()) {
        auto top = std::prev(rest.coeffs().end());
        Partition mu = top->first;
        Rational c = top->second;
        out.add_term(mu, c);
        rest -= jack_in_monomials(mu, kappa, n) * c;
    }
    return out;
}

SymPoly from_jack(const JackExpansion& v)
{
    SymPoly out(v.n);
    for (const auto& [mu, c] : v.coeffs)
        out += jack_in_monomials(mu, v.kappa, v.n) * c;
    return out;
}

Rational binomial_from_E0(const Partition& lambda, int row, const Rational& kappa, int n)
{
    Partition up = raised(lambda, row);
    if (up.length() > n)
        throw std::invalid_argument("raised partition is longer than n");
    MultiPoly image = apply_E(0, expand(jack_in_monomials(up, kappa, n)));
    Rational c = to_jack(collect_symmetric(image), kappa).coeff(lambda);
    return checked_div(c, spec_ratio_cocover(lambda, row, kappa, n), "E_0 coefficient");
}

JackExpansion apply_basic(BasicOperator op, const JackExpansion& v)
{
    const int n = v.n;
    const Rational& kappa = v.kappa;
    JackExpansion out(n, kappa);
    for (const auto& [lambda, c] : v.coeffs) {
        switch (op) {
        case BasicOperator::E1:
            out.add_term(lambda, c * lambda.weight());
            break;
        case BasicOperator::D2:
            out.add_term(lambda, c * eigenvalue_d(lambda, kappa, n));
            break;
        case BasicOperator::E0:
        case BasicOperator::D1:
            for (const auto& cc : co_covers(lambda, n, Direction::Down)) {
                Rational w = binomial_cocover(cc.partition, cc.row, kappa)
                    * spec_ratio_cocover(cc.partition, cc.row, kappa, n);
                if (op == BasicOperator::D1)
                    w *= part(lambda, cc.row) - 1 + kappa * (n - cc.row);
                out.add_term(cc.partition, c * w);
            }
            break;
        case BasicOperator::MulP1:
            for (const auto& cc : co_covers(lambda, n, Direction::Up)) {
                Rational w = binomial_cocover(lambda, cc.row, kappa)
                    * checked_div(hook_products(lambda, kappa).lower, hook_products(cc.partition, kappa).lower,
                                  "hook ratio");
                out.add_term(cc.partition, c * w);
            }
            break;
        }
    }
    return out;
}

Rational gen_pochhammer(const Rational& alpha, const Partition& lambda, const Rational& kappa)
{
    Rational value = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        value *= rising(alpha - kappa * (i - 1), part(lambda, i));
    return value;
}

JackExpansion hyperg_trunc(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                           const Rational& scale, const Rational& kappa, int n, int maxdeg)
{
    JackExpansion out(n, kappa);
    for (const auto& lambda : partitions_up_to(maxdeg, n)) {
        Rational den = hook_products(lambda, kappa).lower;
        for (const auto& beta : lower)
            den *= gen_pochhammer(beta, lambda, kappa);
        Rational num = pow(scale, lambda.weight());
        for (const auto& alpha : upper)
            num *= gen_pochhammer(alpha, lambda, kappa);
        out.add_term(lambda, checked_div(num, den, "hypergeometric series"));
    }
    return out;
}

} // namespace besselpoly
