#include "besselpoly/polynomial.hpp"

#include "besselpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace besselpoly {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const
{
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    // Larger exponent of an earlier variable ranks higher.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int n, const Rational& c)
{
    MultiPoly p(n);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i)
{
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

int MultiPoly::degree() const
{
    if (terms_.empty())
        return -1;
    const Exponent& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational MultiPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("exponent length does not match variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MultiPoly::check_same(const MultiPoly& other) const
{
    if (n_ != other.n_)
        throw std::invalid_argument("polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_same(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_same(other);
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_same(b);
    MultiPoly out(a.n_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly MultiPoly::shifted(const Exponent& shift) const
{
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] += shift[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(int i) const
{
    auto k = static_cast<std::size_t>(i);
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0)
            continue;
        Exponent f = e;
        --f[k];
        out.add_term(f, c * e[k]);
    }
    return out;
}

MultiPoly MultiPoly::euler(int i) const
{
    auto k = static_cast<std::size_t>(i);
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_)
        if (e[k] != 0)
            out.terms_.emplace_hint(out.terms_.end(), e, c * e[k]);
    return out;
}

MultiPoly MultiPoly::pow(int k) const
{
    if (k < 0)
        throw std::invalid_argument("negative polynomial power");
    MultiPoly result = constant(n_, Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                term *= besselpoly::pow(point[i], e[i]);
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::permuted(std::span<const int> perm) const
{
    MultiPoly out(n_);
    Exponent f(static_cast<std::size_t>(n_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            f[static_cast<std::size_t>(perm[i])] = e[i];
        out.add_term(f, c);
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g)
{
    if (g.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("polynomials in different numbers of variables");
    const auto& [glead_e, glead_c] = *g.terms().rbegin();
    MultiPoly quotient(f.nvars());
    MultiPoly rem = f;
    Exponent shift(glead_e.size());
    while (!rem.is_zero()) {
        const auto& [lead_e, lead_c] = *rem.terms().rbegin();
        for (std::size_t i = 0; i < shift.size(); ++i) {
            shift[i] = lead_e[i] - glead_e[i];
            if (shift[i] < 0)
                throw NotDivisible("polynomial division leaves a non-zero remainder");
        }
        Rational c = lead_c / glead_c;
        quotient.add_term(shift, c);
        MultiPoly step = g.shifted(shift);
        step *= c;
        rem -= step;
    }
    return quotient;
}

MultiPoly variable_difference(int n, int i, int j)
{
    MultiPoly p = MultiPoly::variable(n, i);
    p -= MultiPoly::variable(n, j);
    return p;
}

SymPoly::SymPoly(int n, CoeffMap coeffs)
    : n_(n)
{
    for (auto& [lambda, c] : coeffs)
        add_term(lambda, c);
}

SymPoly SymPoly::monomial(int n, const Partition& lambda, const Rational& c)
{
    SymPoly p(n);
    p.add_term(lambda, c);
    return p;
}

int SymPoly::degree() const
{
    int d = -1;
    for (const auto& [lambda, c] : coeffs_)
        d = std::max(d, lambda.weight());
    return d;
}

Rational SymPoly::coeff(const Partition& lambda) const
{
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& lambda, const Rational& c)
{
    if (lambda.length() > n_)
        throw std::invalid_argument("partition " + to_string(lambda) + " longer than variable count");
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("symmetric polynomials in different numbers of variables");
    for (const auto& [lambda, c] : other.coeffs_)
        add_term(lambda, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("symmetric polynomials in different numbers of variables");
    for (const auto& [lambda, c] : other.coeffs_)
        add_term(lambda, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, v] : coeffs_)
        v *= c;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b)
{
    return collect_symmetric(expand(a) * expand(b));
}

MultiPoly monomial_symmetric(const Partition& lambda, int n)
{
    Exponent e = lambda.padded(n);
    std::sort(e.begin(), e.end());
    MultiPoly p(n);
    do {
        p.add_term(e, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

MultiPoly expand(const SymPoly& f)
{
    MultiPoly out(f.nvars());
    for (const auto& [lambda, c] : f.coeffs()) {
        MultiPoly m = monomial_symmetric(lambda, f.nvars());
        m *= c;
        out += m;
    }
    return out;
}

SymPoly collect_symmetric(const MultiPoly& f)
{
    int n = f.nvars();
    SymPoly out(n);
    // Every monomial must carry the same coefficient as its sorted
    // representative, and every orbit must be complete.
    std::map<Partition, std::size_t> seen;
    for (const auto& [e, c] : f.terms()) {
        Exponent sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        Partition lambda(sorted);
        Rational rep = f.coeff(sorted);
        if (rep != c)
            throw NotSymmetric("inconsistent coefficients on the orbit of " + to_string(lambda));
        ++seen[lambda];
        if (e == sorted)
            out.add_term(lambda, c);
    }
    for (const auto& [lambda, count] : seen)
        if (static_cast<long>(count) != orbit_size(lambda, n))
            throw NotSymmetric("incomplete orbit for " + to_string(lambda));
    return out;
}

SymPoly elementary(int r, int n)
{
    if (r < 0 || r > n)
        throw std::invalid_argument("elementary symmetric degree out of range");
    return SymPoly::monomial(n, Partition(std::vector<int>(static_cast<std::size_t>(r), 1)));
}

SymPoly power_sum(int r, int n)
{
    if (r < 1)
        throw std::invalid_argument("power sum degree must be positive");
    return SymPoly::monomial(n, Partition{r});
}

long orbit_size(const Partition& lambda, int n)
{
    std::vector<int> e = lambda.padded(n);
    long total = 1;
    for (int k = 2; k <= n; ++k)
        total *= k;
    std::map<int, int> mult;
    for (int v : e)
        ++mult[v];
    for (const auto& [v, m] : mult)
        for (int k = 2; k <= m; ++k)
            total /= k;
    return total;
}

Rational evaluate_at_ones(const SymPoly& f)
{
    Rational sum(0);
    for (const auto& [lambda, c] : f.coeffs())
        sum += c * orbit_size(lambda, f.nvars());
    return sum;
}

} // namespace besselpoly
