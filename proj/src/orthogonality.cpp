#include "besselpoly/orthogonality.hpp"

#include "besselpoly/errors.hpp"
#include "besselpoly/operators.hpp"

#include <stdexcept>
#include <string>

namespace besselpoly {

bool check_L2_condition(int m, const BesselParams& p)
{
    return p.a < -2 * (m + p.kappa * (p.n - 1)) + 1;
}

Rational moment_1d(int p, const Rational& a)
{
    if (p < 0)
        throw std::invalid_argument("moment exponent must be non-negative");
    if (!(p < 1 - a))
        throw ConvergenceError("moment of x^" + std::to_string(p) + " diverges at a = " + to_string(a));
    Rational out = pow(Rational(2), p);
    for (int j = 0; j < p; ++j)
        out /= -a - j;
    return out;
}

namespace {

long integer_kappa(const Rational& kappa)
{
    if (!is_integer(kappa) || kappa < 0)
        throw std::invalid_argument("the moment integral needs a non-negative integer kappa");
    return kappa.get_num().get_si();
}

MultiPoly vandermonde_power(int n, long kappa)
{
    MultiPoly sq = MultiPoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MultiPoly d = variable_difference(n, i, j);
            sq = sq * d * d;
        }
    return sq.pow(static_cast<int>(kappa));
}

Rational integrate(const MultiPoly& h, const Rational& a)
{
    for (const auto& [e, c] : h.terms())
        for (int k : e)
            moment_1d(k, a);
    Rational total = 0;
    for (const auto& [e, c] : h.terms()) {
        Rational term = c;
        for (int k : e)
            term *= moment_1d(k, a);
        total += term;
    }
    return total;
}

void check_vars(const SymPoly& f, const BesselParams& p)
{
    if (f.nvars() != p.n)
        throw std::invalid_argument("polynomial and parameters disagree on n");
}

} // namespace

Rational inner_product(const SymPoly& f, const SymPoly& g, const BesselParams& p)
{
    check_vars(f, p);
    check_vars(g, p);
    const long k = integer_kappa(p.kappa);
    return integrate(expand(f) * expand(g) * vandermonde_power(p.n, k), p.a);
}

GramMatrix gram_matrix(int m, const BesselParams& p)
{
    const long k = integer_kappa(p.kappa);
    if (!check_L2_condition(m, p))
        throw ConvergenceError("degree " + std::to_string(m) + " is outside the square-integrable range");
    GramMatrix gram;
    gram.basis = partitions_up_to(m, p.n);
    const MultiPoly weight = vandermonde_power(p.n, k);
    std::vector<MultiPoly> polys, weighted;
    for (const auto& lambda : gram.basis) {
        polys.push_back(expand(bessel_expand(lambda, p).monomials()));
        weighted.push_back(polys.back() * weight);
    }
    const std::size_t size = gram.basis.size();
    gram.entries.assign(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) {
            gram.entries[i][j] = integrate(polys[i] * weighted[j], p.a);
            gram.entries[j][i] = gram.entries[i][j];
        }
    return gram;
}

bool symmetry_check(int d, const SymPoly& f, const SymPoly& g, const BesselParams& p)
{
    return inner_product(apply_higher(d, f, p), g, p) == inner_product(f, apply_higher(d, g, p), p);
}

MomentTable2::MomentTable2(int max_degree, Rational a, Rational kappa, Reading reading)
    : a_(std::move(a)), kappa_(std::move(kappa)), max_degree_(max_degree), reading_(reading)
{
    if (max_degree < 0)
        throw std::invalid_argument("maximal degree must be non-negative");
    const bool literal = reading_ == Reading::Literal;
    values_[{0, 0}] = 1;
    for (int w = 1; w <= max_degree; ++w) {
        for (int m = 1; 2 * m <= w; ++m) {
            const int k = w - 2 * m;
            const Rational c = literal ? Rational(k + 2 * (m - 1) - 2 * (kappa_ + a_))
                                       : Rational(k + 2 * (m - 1) + 2 * (kappa_ + a_));
            if (c == 0)
                throw DegenerateRecurrence("vanishing recurrence coefficient for I(" + std::to_string(k) + ","
                                           + std::to_string(m) + ")");
            values_[{k, m}] = (literal ? 1 : -2) * values_.at({k + 1, m - 1}) / c;
        }
        const Rational c = literal ? Rational(w - 1 - (2 * kappa_ + a_)) : Rational(w - 1 + 2 * kappa_ + a_);
        if (c == 0)
            throw DegenerateRecurrence("vanishing recurrence coefficient for I(" + std::to_string(w) + ",0)");
        Rational rhs = (literal ? 1 : -4) * values_.at({w - 1, 0});
        if (w >= 2)
            rhs += 2 * (w - 1) * values_.at({w - 2, 1});
        values_[{w, 0}] = rhs / c;
    }
}

const Rational& MomentTable2::at(int k, int m) const
{
    auto it = values_.find({k, m});
    if (it == values_.end())
        throw std::out_of_range("moment I(" + std::to_string(k) + "," + std::to_string(m) + ") is beyond the table");
    return it->second;
}

bool MomentTable2::consistent() const
{
    for (const auto& [key, value] : values_) {
        const auto [k, m] = key;
        if (m == 0 || k + 1 + 2 * m > max_degree_)
            continue;
        const bool literal = reading_ == Reading::Literal;
        Rational rhs = (literal ? 1 : -4) * value;
        if (k >= 1)
            rhs += 2 * k * at(k - 1, m + 1);
        const Rational c = literal ? Rational(k + m - (2 * kappa_ + a_)) : Rational(k + m + 2 * kappa_ + a_);
        if (c * at(k + 1, m) != rhs)
            return false;
    }
    return true;
}

namespace {

using ElementaryPoly = std::map<std::pair<int, int>, Rational>;

ElementaryPoly multiply(const ElementaryPoly& x, const ElementaryPoly& y)
{
    ElementaryPoly out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y)
            out[{kx.first + ky.first, kx.second + ky.second}] += cx * cy;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

ElementaryPoly combine(const ElementaryPoly& x, const ElementaryPoly& y, const Rational& cy)
{
    ElementaryPoly out = x;
    for (const auto& [k, c] : y)
        out[k] += c * cy;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

std::map<std::pair<int, int>, Rational> to_elementary2(const SymPoly& f)
{
    if (f.nvars() != 2)
        throw std::invalid_argument("the two-variable functional needs n = 2");
    const ElementaryPoly e1{{{1, 0}, 1}};
    const ElementaryPoly e2{{{0, 1}, 1}};
    std::vector<ElementaryPoly> power{{{{0, 0}, 2}}, e1};
    auto power_sum_at = [&](int k) -> const ElementaryPoly& {
        while (static_cast<int>(power.size()) <= k) {
            const std::size_t s = power.size();
            power.push_back(combine(multiply(e1, power[s - 1]), multiply(e2, power[s - 2]), -1));
        }
        return power[static_cast<std::size_t>(k)];
    };
    ElementaryPoly out;
    for (const auto& [mu, c] : f.coeffs()) {
        const int p = mu[0], q = mu[1];
        ElementaryPoly term{{{0, q}, c}};
        if (p > q)
            term = multiply(term, power_sum_at(p - q));
        out = combine(out, term, 1);
    }
    return out;
}

Rational functional_apply(const SymPoly& f, const MomentTable2& table)
{
    Rational total = 0;
    for (const auto& [key, c] : to_elementary2(f))
        total += c * table.at(key.first, key.second);
    return total;
}

} // namespace besselpoly
