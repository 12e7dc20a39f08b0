#include "besselpoly/operators.hpp"

#include "besselpoly/errors.hpp"
#include "besselpoly/factored_fraction.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace besselpoly {

SecondOrderOperator bessel_operator(const BesselParams& p)
{
    return {{0, 0, 1}, {2, p.a}, {0, 0, 1}, p.kappa};
}

SymPoly apply_DB_direct(const SymPoly& f, const BesselParams& p)
{
    if (f.nvars() != p.n)
        throw std::invalid_argument("polynomial and parameters disagree on n");
    return apply_direct(bessel_operator(p), f);
}

JackExpansion apply_DB_jack(const JackExpansion& v, const BesselParams& p)
{
    if (v.n != p.n || v.kappa != p.kappa)
        throw std::invalid_argument("expansion and parameters disagree");
    JackExpansion out = apply_basic(BasicOperator::D2, v);
    out += apply_basic(BasicOperator::E1, v) * p.a;
    out += apply_basic(BasicOperator::E0, v) * Rational(2);
    return out;
}

namespace {

void check_order(int d, int d_max)
{
    if (d < 1 || d > d_max)
        throw std::invalid_argument("operator order must lie in 1.." + std::to_string(d_max));
}

MultiPoly pair_sum(int n, int i, int j)
{
    return MultiPoly::variable(n, i) + MultiPoly::variable(n, j);
}

// One stage of the recursion for the intermediates of sign s.
std::vector<FactoredFraction> stage(int s, const std::vector<FactoredFraction>& same,
                                    const std::vector<FactoredFraction>& opposite, const BesselParams& p)
{
    const int n = p.n;
    const Rational sign(s);
    const Rational half = sign / 2;
    const Rational half_kappa = sign * p.kappa / 2;
    std::vector<FactoredFraction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& fi = same[static_cast<std::size_t>(i)];
        FactoredFraction t = fi.euler(i) * sign;
        FactoredFraction flip = fi - opposite[static_cast<std::size_t>(i)];
        t += (flip * (p.a - 1) + flip.divided_by_var(i) * Rational(2)) * half;
        FactoredFraction coupling(n);
        for (int j = 0; j < n; ++j) {
            if (j == i)
                continue;
            FactoredFraction diff = fi - same[static_cast<std::size_t>(j)];
            coupling += (diff * pair_sum(n, i, j)).divided_by_difference(i, j);
            coupling += fi - opposite[static_cast<std::size_t>(j)];
        }
        t += coupling * half_kappa;
        out.push_back(std::move(t.reduce()));
    }
    return out;
}

using CacheKey = std::tuple<int, Partition, std::string, std::string, int>;

std::mutex cache_mutex;
std::map<CacheKey, SymPoly> monomial_cache;

const SymPoly& higher_on_monomial(int d, const Partition& lambda, const BesselParams& p, int d_max)
{
    CacheKey key{d, lambda, to_string(p.a), to_string(p.kappa), p.n};
    {
        std::lock_guard lock(cache_mutex);
        auto it = monomial_cache.find(key);
        if (it != monomial_cache.end())
            return it->second;
    }
    SymPoly value = apply_higher(d, SymPoly::monomial(p.n, lambda), p, d_max);
    std::lock_guard lock(cache_mutex);
    return monomial_cache.emplace(std::move(key), std::move(value)).first->second;
}

SymPoly apply_via_monomials(int d, const SymPoly& f, const BesselParams& p, int d_max)
{
    SymPoly out(p.n);
    for (const auto& [mu, c] : f.coeffs())
        out += higher_on_monomial(d, mu, p, d_max) * c;
    return out;
}

std::vector<std::vector<int>> exponents_up_to(int degree, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

Rational monomial_value(const std::vector<int>& alpha, const std::vector<Rational>& z)
{
    Rational v = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        v *= pow(z[i], alpha[i]);
    return v;
}

// Row reduction of an augmented system; returns the solution when the
// coefficient matrix has full column rank, and throws if the system is
// inconsistent.
std::optional<std::vector<Rational>> solve_full_rank(std::vector<std::vector<Rational>> rows)
{
    if (rows.empty())
        return std::nullopt;
    const std::size_t cols = rows.front().size() - 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            return std::nullopt;
        std::swap(rows[rank], rows[pivot]);
        const Rational inv = 1 / rows[rank][c];
        for (auto& x : rows[rank])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const Rational f = rows[r][c];
            for (std::size_t k = c; k <= cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][cols] != 0)
            throw DegenerateRecurrence("eigenvalue samples are not interpolated by a polynomial of the expected degree");
    std::vector<Rational> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        x[c] = rows[c][cols];
    return x;
}

bool even_and_symmetric(const std::map<std::vector<int>, Rational>& coeffs)
{
    for (const auto& [alpha, c] : coeffs) {
        if (c == 0)
            continue;
        for (int k : alpha)
            if (k % 2 != 0)
                return false;
        std::vector<int> sorted = alpha;
        std::sort(sorted.begin(), sorted.end());
        do {
            auto it = coeffs.find(sorted);
            if (it == coeffs.end() || it->second != c)
                return false;
        } while (std::next_permutation(sorted.begin(), sorted.end()));
    }
    return true;
}

} // namespace

SymPoly apply_higher(int d, const SymPoly& f, const BesselParams& p, int d_max)
{
    check_order(d, d_max);
    const int n = p.n;
    if (f.nvars() != n)
        throw std::invalid_argument("polynomial and parameters disagree on n");
    const FactoredFraction seed(expand(f));
    std::vector<FactoredFraction> plus(static_cast<std::size_t>(n), seed);
    std::vector<FactoredFraction> minus = plus;
    for (int s = 1; s <= 2 * d; ++s) {
        auto next_plus = stage(1, plus, minus, p);
        auto next_minus = stage(-1, minus, plus, p);
        plus = std::move(next_plus);
        minus = std::move(next_minus);
        const Rational parity(s % 2 == 0 ? 1 : -1);
        for (int i = 0; i < n; ++i)
            if (!minus[static_cast<std::size_t>(i)].equals(plus[static_cast<std::size_t>(i)] * parity))
                throw NotSymmetric("parity between the +i and -i intermediates fails at stage " + std::to_string(s));
    }
    FactoredFraction total(n);
    for (int i = 0; i < n; ++i) {
        total += plus[static_cast<std::size_t>(i)];
        total += minus[static_cast<std::size_t>(i)];
    }
    total *= Rational(1, 2);
    return collect_symmetric(total.to_poly());
}

Rational eigenvalue_of(int d, const Partition& lambda, const BesselParams& p, int d_max)
{
    const SymPoly y = bessel_expand(lambda, p).monomials();
    const SymPoly image = apply_via_monomials(d, y, p, d_max);
    const Rational e = image.coeff(lambda);
    if (image != y * e)
        throw NotProportional("D_" + std::to_string(d) + " Y" + to_string(lambda) + " is not a multiple of Y"
                              + to_string(lambda));
    return e;
}

Rational leading_eigenvalue(int d, const Partition& lambda, const BesselParams& p, int d_max)
{
    if (lambda.length() > p.n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    return higher_on_monomial(d, lambda, p, d_max).coeff(lambda);
}

bool commutator_check(int d, int e, int max_degree, const BesselParams& p, int d_max)
{
    for (const auto& lambda : partitions_up_to(max_degree, p.n)) {
        const SymPoly m = SymPoly::monomial(p.n, lambda);
        const SymPoly de = apply_via_monomials(d, apply_via_monomials(e, m, p, d_max), p, d_max);
        const SymPoly ed = apply_via_monomials(e, apply_via_monomials(d, m, p, d_max), p, d_max);
        if (de != ed)
            return false;
    }
    return true;
}

GammaPolynomial gamma_poly(int d, const BesselParams& p, int d_max)
{
    check_order(d, d_max);
    const int n = p.n;
    const auto alphas = exponents_up_to(2 * d, n);
    const auto rho = rho_vector(p);
    for (int box = 2 * d; box <= 2 * d + n + 4; ++box) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& lambda : partitions_up_to(box * n, n)) {
            if (lambda[0] > box)
                continue;
            std::vector<Rational> z = rho;
            for (int i = 0; i < n; ++i)
                z[static_cast<std::size_t>(i)] += lambda[static_cast<std::size_t>(i)];
            std::vector<Rational> row;
            for (const auto& alpha : alphas)
                row.push_back(monomial_value(alpha, z));
            row.push_back(leading_eigenvalue(d, lambda, p, d_max));
            rows.push_back(std::move(row));
        }
        if (rows.size() < alphas.size())
            continue;
        auto solution = solve_full_rank(std::move(rows));
        if (!solution)
            continue;
        GammaPolynomial g;
        g.box = box;
        for (std::size_t k = 0; k < alphas.size(); ++k)
            if ((*solution)[k] != 0)
                g.coeffs.emplace(alphas[k], (*solution)[k]);
        g.even_symmetric = even_and_symmetric(g.coeffs);
        return g;
    }
    throw DegenerateRecurrence("interpolation grid never reached full rank");
}

Rational evaluate_gamma(const GammaPolynomial& g, const std::vector<Rational>& z)
{
    Rational v = 0;
    for (const auto& [alpha, c] : g.coeffs)
        v += c * monomial_value(alpha, z);
    return v;
}

bool separation_check(int max_degree, const BesselParams& p)
{
    std::set<std::vector<Rational>> seen;
    for (const auto& lambda : partitions_up_to(max_degree, p.n)) {
        std::vector<Rational> tuple;
        for (int d = 1; d <= p.n; ++d)
            tuple.push_back(leading_eigenvalue(d, lambda, p, std::max(p.n, default_d_max)));
        if (!seen.insert(std::move(tuple)).second)
            return false;
    }
    return true;
}

} // namespace besselpoly
