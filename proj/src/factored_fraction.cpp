#include "besselpoly/factored_fraction.hpp"

#include "besselpoly/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace besselpoly {

int pair_index(int n, int i, int j)
{
    if (i >= j)
        throw std::invalid_argument("pair_index requires i < j");
    // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

namespace {

std::size_t npairs(int n)
{
    return static_cast<std::size_t>(n * (n - 1) / 2);
}

// True when f vanishes on the hyperplane x_i = x_j.
bool vanishes_on_diagonal(const MultiPoly& f, int i, int j)
{
    std::map<Exponent, Rational> folded;
    auto ki = static_cast<std::size_t>(i), kj = static_cast<std::size_t>(j);
    for (const auto& [e, c] : f.terms()) {
        Exponent g = e;
        g[ki] += g[kj];
        g[kj] = 0;
        folded[g] += c;
    }
    return std::all_of(folded.begin(), folded.end(), [](const auto& kv) { return kv.second == 0; });
}

MultiPoly strip_var(const MultiPoly& f, int i, int times)
{
    Exponent shift(static_cast<std::size_t>(f.nvars()), 0);
    shift[static_cast<std::size_t>(i)] = -times;
    return f.shifted(shift);
}

} // namespace

FactoredFraction::FactoredFraction(int n)
    : n_(n), num_(n), var_pows_(static_cast<std::size_t>(n), 0), pair_pows_(npairs(n), 0)
{
}

FactoredFraction::FactoredFraction(MultiPoly numerator)
    : n_(numerator.nvars()),
      num_(std::move(numerator)),
      var_pows_(static_cast<std::size_t>(n_), 0),
      pair_pows_(npairs(n_), 0)
{
}

FactoredFraction::FactoredFraction(MultiPoly numerator, std::vector<int> var_pows, std::vector<int> pair_pows)
    : n_(numerator.nvars()), num_(std::move(numerator)), var_pows_(std::move(var_pows)), pair_pows_(std::move(pair_pows))
{
    if (var_pows_.size() != static_cast<std::size_t>(n_) || pair_pows_.size() != npairs(n_))
        throw std::invalid_argument("factored denominator has the wrong shape");
    for (int v : var_pows_)
        if (v < 0)
            throw std::invalid_argument("negative denominator exponent");
    for (int v : pair_pows_)
        if (v < 0)
            throw std::invalid_argument("negative denominator exponent");
}

int FactoredFraction::pair_pow(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    return pair_pows_[static_cast<std::size_t>(pair_index(n_, i, j))];
}

bool FactoredFraction::is_polynomial() const
{
    return std::all_of(var_pows_.begin(), var_pows_.end(), [](int v) { return v == 0; })
        && std::all_of(pair_pows_.begin(), pair_pows_.end(), [](int v) { return v == 0; });
}

MultiPoly FactoredFraction::lifted(const std::vector<int>& vp, const std::vector<int>& pp) const
{
    Exponent shift(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] = vp[i] - var_pows_[i];
    MultiPoly out = num_.shifted(shift);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            auto k = static_cast<std::size_t>(pair_index(n_, i, j));
            int extra = pp[k] - pair_pows_[k];
            if (extra > 0)
                out = out * variable_difference(n_, i, j).pow(extra);
        }
    }
    return out;
}

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& other)
{
    if (n_ != other.n_)
        throw std::invalid_argument("fractions in different numbers of variables");
    if (other.is_zero())
        return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    std::vector<int> vp(var_pows_.size()), pp(pair_pows_.size());
    for (std::size_t i = 0; i < vp.size(); ++i)
        vp[i] = std::max(var_pows_[i], other.var_pows_[i]);
    for (std::size_t i = 0; i < pp.size(); ++i)
        pp[i] = std::max(pair_pows_[i], other.pair_pows_[i]);
    MultiPoly sum = lifted(vp, pp);
    sum += other.lifted(vp, pp);
    num_ = std::move(sum);
    var_pows_ = std::move(vp);
    pair_pows_ = std::move(pp);
    if (num_.is_zero()) {
        std::fill(var_pows_.begin(), var_pows_.end(), 0);
        std::fill(pair_pows_.begin(), pair_pows_.end(), 0);
    }
    return *this;
}

FactoredFraction& FactoredFraction::operator-=(const FactoredFraction& other)
{
    return *this += other * Rational(-1);
}

FactoredFraction& FactoredFraction::operator*=(const Rational& c)
{
    num_ *= c;
    if (num_.is_zero())
        *this = FactoredFraction(n_);
    return *this;
}

FactoredFraction& FactoredFraction::operator*=(const MultiPoly& p)
{
    num_ = num_ * p;
    if (num_.is_zero())
        *this = FactoredFraction(n_);
    return *this;
}

FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b)
{
    FactoredFraction out(a.num_ * b.num_, a.var_pows_, a.pair_pows_);
    for (std::size_t i = 0; i < out.var_pows_.size(); ++i)
        out.var_pows_[i] += b.var_pows_[i];
    for (std::size_t i = 0; i < out.pair_pows_.size(); ++i)
        out.pair_pows_[i] += b.pair_pows_[i];
    if (out.num_.is_zero())
        return FactoredFraction(a.n_);
    return out;
}

FactoredFraction FactoredFraction::divided_by_var(int i) const
{
    if (is_zero())
        return *this;
    FactoredFraction out(*this);
    ++out.var_pows_[static_cast<std::size_t>(i)];
    return out;
}

FactoredFraction FactoredFraction::divided_by_difference(int i, int j) const
{
    if (i == j)
        throw std::invalid_argument("difference of a variable with itself");
    if (is_zero())
        return *this;
    FactoredFraction out(*this);
    if (i > j) {
        // 1/(x_i - x_j) = -1/(x_j - x_i)
        std::swap(i, j);
        out.num_ *= Rational(-1);
    }
    ++out.pair_pows_[static_cast<std::size_t>(pair_index(n_, i, j))];
    return out;
}

FactoredFraction FactoredFraction::euler(int i) const
{
    if (is_zero())
        return *this;
    // x_i d/dx_i [N x^{-c} prod (x_k - x_l)^{-d}]
    //   = (x_i N_i - c_i N)/den - sum_{pairs p containing i} d_p s_p x_i N/(den * p)
    // where s_p = +1 if i is the first index of p and -1 otherwise.
    MultiPoly head = num_.euler(i);
    MultiPoly tail = num_;
    tail *= Rational(var_pows_[static_cast<std::size_t>(i)]);
    head -= tail;
    FactoredFraction out(std::move(head), var_pows_, pair_pows_);
    MultiPoly xi_num = num_ * MultiPoly::variable(n_, i);
    for (int j = 0; j < n_; ++j) {
        if (j == i)
            continue;
        int lo = std::min(i, j), hi = std::max(i, j);
        auto k = static_cast<std::size_t>(pair_index(n_, lo, hi));
        int d = pair_pows_[k];
        if (d == 0)
            continue;
        int sign = i == lo ? 1 : -1;
        FactoredFraction term(xi_num * Rational(-d * sign), var_pows_, pair_pows_);
        ++term.pair_pows_[k];
        out += term;
    }
    return out;
}

FactoredFraction& FactoredFraction::reduce()
{
    if (num_.is_zero()) {
        std::fill(var_pows_.begin(), var_pows_.end(), 0);
        std::fill(pair_pows_.begin(), pair_pows_.end(), 0);
        return *this;
    }
    for (int i = 0; i < n_; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (var_pows_[k] == 0)
            continue;
        int minexp = var_pows_[k];
        for (const auto& [e, c] : num_.terms())
            minexp = std::min(minexp, e[k]);
        if (minexp > 0) {
            num_ = strip_var(num_, i, minexp);
            var_pows_[k] -= minexp;
        }
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            auto k = static_cast<std::size_t>(pair_index(n_, i, j));
            while (pair_pows_[k] > 0 && vanishes_on_diagonal(num_, i, j)) {
                num_ = divide_exact(num_, variable_difference(n_, i, j));
                --pair_pows_[k];
            }
        }
    }
    return *this;
}

MultiPoly FactoredFraction::to_poly() const
{
    FactoredFraction copy(*this);
    copy.reduce();
    if (!copy.is_polynomial())
        throw NotDivisible("fraction does not reduce to a polynomial");
    return copy.num_;
}

bool FactoredFraction::equals(const FactoredFraction& other) const
{
    FactoredFraction diff(*this);
    diff -= other;
    return diff.is_zero();
}

} // namespace besselpoly
