#include "besselpoly/pieri_norms.hpp"

#include "besselpoly/errors.hpp"
#include "laurent.hpp"
#include "shift_product.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace besselpoly {

using detail::Laurent;
using detail::shift_product;

Rational v_hat(const Rational& z, const Rational& kappa)
{
    if (z == 0)
        throw PoleError("v_hat has a pole at 0");
    return (kappa + z) / z;
}

Rational w_hat(const Rational& z, const Rational& a)
{
    Rational den = 2 * z * (2 * z + 1);
    if (den == 0)
        throw PoleError("w_hat has a pole at " + to_string(z));
    return ((a - 1) / 2 + z) / den;
}

namespace {

Rational v_coef(Sign s, const Rational& x, const Rational& kappa)
{
    return s == Sign::Plus ? v_hat(x, kappa) : v_hat(-x - 1, kappa);
}

Rational w_coef(Sign s, const Rational& x, const Rational& a)
{
    return s == Sign::Plus ? w_hat(x, a) : Rational(-w_hat(-x - 1, a));
}

Laurent divide(const Laurent& x, const Laurent& y)
{
    return x / y;
}

template <class Num>
struct Coefficients {
    Num kappa;
    Rational half_a; // (a - 1)/2

    Num v(const Num& z) const { return divide(kappa + z, z); }
    Num w(const Num& z) const
    {
        Num two(Rational(2));
        return divide(Num(half_a) + z, two * z * (two * z + Num(Rational(1))));
    }

    Num V(const std::vector<int>& eps, const std::vector<int>& I, const std::vector<int>& J,
          const std::vector<Num>& z) const
    {
        Num out(Rational(1));
        std::vector<Num> ez;
        for (std::size_t k = 0; k < I.size(); ++k)
            ez.push_back(eps[k] > 0 ? z[static_cast<std::size_t>(I[k])] : -z[static_cast<std::size_t>(I[k])]);
        for (const auto& x : ez)
            out = out * w(x);
        for (std::size_t k = 0; k < ez.size(); ++k)
            for (std::size_t l = k + 1; l < ez.size(); ++l) {
                Num s = ez[k] + ez[l];
                out = out * v(s) * v(s + Num(Rational(1)));
            }
        for (const auto& x : ez)
            for (int j : J) {
                const Num& zj = z[static_cast<std::size_t>(j)];
                out = out * v(x + zj) * v(x - zj);
            }
        return out;
    }

    Num U(const std::vector<int>& J, int order, const std::vector<Num>& z) const
    {
        if (order < 0 || order > static_cast<int>(J.size()))
            throw std::invalid_argument("U coefficient order out of range");
        Num total;
        const std::size_t m = J.size();
        // Subsets K of J of size `order`, as bitmasks.
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != order)
                continue;
            std::vector<int> K, rest;
            for (std::size_t b = 0; b < m; ++b)
                ((mask >> b) & 1u ? K : rest).push_back(J[b]);
            for (unsigned signs = 0; signs < (1u << K.size()); ++signs) {
                std::vector<Num> ez;
                for (std::size_t k = 0; k < K.size(); ++k) {
                    const Num& zk = z[static_cast<std::size_t>(K[k])];
                    ez.push_back((signs >> k) & 1u ? -zk : zk);
                }
                Num term(Rational(1));
                for (const auto& x : ez)
                    term = term * w(x);
                for (std::size_t k = 0; k < ez.size(); ++k)
                    for (std::size_t l = k + 1; l < ez.size(); ++l) {
                        Num s = ez[k] + ez[l];
                        term = term * v(s) * v(-s - Num(Rational(1)));
                    }
                for (const auto& x : ez)
                    for (int j : rest) {
                        const Num& zj = z[static_cast<std::size_t>(j)];
                        term = term * v(x + zj) * v(x - zj);
                    }
                total = total + term;
            }
        }
        return order % 2 == 0 ? total : -total;
    }
};

Coefficients<Laurent> perturbed(const BesselParams& p)
{
    return {Laurent::affine(p.kappa, 1), (p.a - 1) / 2};
}

std::vector<Laurent> perturbed_point(const std::vector<Rational>& z, const std::vector<Rational>& dz)
{
    if (z.size() != dz.size())
        throw std::invalid_argument("point and direction differ in size");
    std::vector<Laurent> out;
    out.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out.push_back(Laurent::affine(z[i], dz[i]));
    return out;
}

std::vector<Rational> rho_direction(int n)
{
    std::vector<Rational> dz;
    for (int i = 1; i <= n; ++i)
        dz.emplace_back(n - i);
    return dz;
}

void check_point(const std::vector<Rational>& z, const BesselParams& p)
{
    if (static_cast<int>(z.size()) != p.n)
        throw std::invalid_argument("point has the wrong number of entries");
}

} // namespace

Rational delta_shift_ratio(Sign sign, const std::vector<Rational>& z, const std::vector<int>& shift,
                           const BesselParams& p)
{
    check_point(z, p);
    if (shift.size() != z.size())
        throw std::invalid_argument("shift has the wrong number of entries");
    auto v = [&](const Rational& x) { return v_coef(sign, x, p.kappa); };
    auto w = [&](const Rational& x) { return w_coef(sign, x, p.a); };
    Rational out = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) {
            out *= shift_product(v, Rational(z[i] - z[j]), shift[i] - shift[j]);
            out *= shift_product(v, Rational(z[i] + z[j]), shift[i] + shift[j]);
        }
        out *= shift_product(w, z[i], shift[i]);
    }
    return out;
}

Rational delta_ratio(Sign sign, const Partition& lambda, const BesselParams& p)
{
    if (lambda.length() > p.n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    return delta_shift_ratio(sign, rho_vector(p), lambda.padded(p.n), p);
}

SymPoly E_hat_r(int r, int n, Reading reading)
{
    if (r < 1 || r > n)
        throw std::invalid_argument("r must lie in 1..n");
    Rational c = pow(Rational(2), -r);
    if (reading == Reading::Literal && r % 2 == 0)
        c = -c;
    return elementary(r, n) * c;
}

Rational V_coeff(const std::vector<int>& eps, const std::vector<int>& I, const std::vector<int>& J,
                 const std::vector<Rational>& z, const std::vector<Rational>& dz, const BesselParams& p)
{
    check_point(z, p);
    if (eps.size() != I.size())
        throw std::invalid_argument("one sign per index is required");
    return perturbed(p).V(eps, I, J, perturbed_point(z, dz)).at_zero();
}

Rational V_coeff(const std::vector<int>& eps, const std::vector<int>& I, const std::vector<int>& J,
                 const std::vector<Rational>& z, const BesselParams& p)
{
    return V_coeff(eps, I, J, z, rho_direction(p.n), p);
}

Rational U_coeff(const std::vector<int>& J, int order, const std::vector<Rational>& z,
                 const std::vector<Rational>& dz, const BesselParams& p)
{
    check_point(z, p);
    return perturbed(p).U(J, order, perturbed_point(z, dz)).at_zero();
}

Rational U_coeff(const std::vector<int>& J, int order, const std::vector<Rational>& z, const BesselParams& p)
{
    return U_coeff(J, order, z, rho_direction(p.n), p);
}

std::map<Partition, Rational, GradedPartitionLess> PieriExpansion::by_target() const
{
    std::map<Partition, Rational, GradedPartitionLess> out;
    for (const auto& t : terms)
        out[t.target] += t.coeff;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

PieriExpansion pieri_expand(int r, const Partition& lambda, const BesselParams& p)
{
    const int n = p.n;
    if (r < 1 || r > n)
        throw std::invalid_argument("r must lie in 1..n");
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");

    std::vector<Rational> z = rho_vector(p);
    const std::vector<int> parts = lambda.padded(n);
    for (int i = 0; i < n; ++i)
        z[static_cast<std::size_t>(i)] += parts[static_cast<std::size_t>(i)];
    const auto coef = perturbed(p);
    const auto zt = perturbed_point(z, rho_direction(n));

    PieriExpansion out;
    out.r = r;
    out.lambda = lambda;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size > r)
            continue;
        std::vector<int> I, J;
        for (int i = 0; i < n; ++i)
            ((mask >> i) & 1u ? I : J).push_back(i);
        for (unsigned signs = 0; signs < (1u << size); ++signs) {
            std::vector<int> eps;
            std::vector<int> moved = parts;
            for (int k = 0; k < size; ++k) {
                int e = (signs >> k) & 1u ? -1 : 1;
                eps.push_back(e);
                moved[static_cast<std::size_t>(I[static_cast<std::size_t>(k)])] += e;
            }
            bool valid = std::all_of(moved.begin(), moved.end(), [](int x) { return x >= 0; });
            for (int i = 0; valid && i + 1 < n; ++i)
                valid = moved[static_cast<std::size_t>(i)] >= moved[static_cast<std::size_t>(i) + 1];
            if (!valid)
                continue;
            Rational c = (coef.U(J, r - size, zt) * coef.V(eps, I, J, zt)).at_zero();
            if (c == 0)
                continue;
            out.terms.push_back({I, eps, Partition(moved), c});
        }
    }
    return out;
}

PieriReport pieri_verify(int r, const Partition& lambda, const BesselParams& p, Reading reading)
{
    PieriReport report;
    std::map<Partition, SymPoly> tilde;
    auto renormalized = [&](const Partition& mu) -> const SymPoly& {
        auto it = tilde.find(mu);
        if (it == tilde.end())
            it = tilde.emplace(mu, renormalize(bessel_expand(mu, p)).monomials()).first;
        return it->second;
    };

    SymPoly rest = E_hat_r(r, p.n, reading) * renormalized(lambda);
    while (!rest.is_zero()) {
        auto top = std::prev(rest.coeffs().end());
        Partition mu = top->first;
        const SymPoly& y = renormalized(mu);
        Rational c = top->second / y.coeff(mu);
        report.computed[mu] += c;
        rest -= y * c;
    }
    std::erase_if(report.computed, [](const auto& kv) { return kv.second == 0; });
    report.predicted = pieri_expand(r, lambda, p).by_target();
    report.ok = report.computed == report.predicted;
    if (!report.ok) {
        for (const auto& [mu, c] : report.predicted) {
            auto it = report.computed.find(mu);
            Rational got = it == report.computed.end() ? Rational(0) : it->second;
            if (got != c) {
                report.mismatch = to_string(mu) + ": expansion " + to_string(got) + ", recurrence " + to_string(c);
                break;
            }
        }
        if (report.mismatch.empty())
            for (const auto& [mu, c] : report.computed)
                if (!report.predicted.contains(mu)) {
                    report.mismatch = to_string(mu) + ": expansion " + to_string(c) + ", recurrence 0";
                    break;
                }
    }
    return report;
}

Rational norm_ratio(const Partition& lambda, const BesselParams& p)
{
    return pow(Rational(-4), lambda.weight()) * delta_ratio(Sign::Plus, lambda, p)
        * delta_ratio(Sign::Minus, lambda, p);
}

Rational norm_ratio_pochhammer(const Partition& lambda, const BesselParams& p)
{
    const int n = p.n;
    const Rational& k = p.kappa;
    const Rational& a = p.a;
    const std::vector<int> l = lambda.padded(n);
    Rational num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        const int li = l[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            const int lj = l[static_cast<std::size_t>(j - 1)];
            const int d = li - lj, s = li + lj, c = 2 * n - i - j;
            num *= rising(Rational(k * (j - i + 1)), d) * rising(Rational(k * (j - i - 1) + 1), d);
            den *= rising(Rational(k * (j - i)), d) * rising(Rational(k * (j - i) + 1), d);
            num *= falling(Rational(-a - k * (c + 1) + 1), s) * falling(Rational(-a - k * (c - 1)), s);
            den *= falling(Rational(-a - k * c + 1), s) * falling(Rational(-a - k * c), s);
        }
        num *= rising(Rational(k * (n - i) + 1), li) * falling(Rational(-a - k * (n - i) + 1), li);
        den *= falling(Rational(-a - 2 * k * (n - i) + 1), 2 * li) * falling(Rational(-a - 2 * k * (n - i)), 2 * li);
    }
    if (den == 0)
        throw PoleError("vanishing factorial in the norm quotient");
    return pow(Rational(4), lambda.weight()) * num / den;
}

namespace {

// Products of Gamma values at integer-kappa arguments, with the common
// factor Gamma(1 - a) counted rather than evaluated. Poles at non-positive
// integer arguments are resolved as kappa -> kappa + e and counted in `order`.
class GammaProduct {
public:
    GammaProduct(const Rational& a, long kappa) : a_(a), kappa_(kappa) {}

    // Gamma(p kappa + q)^power.
    void kappa_term(int p, long q, int power)
    {
        long x = p * kappa_ + q;
        Rational g;
        if (x >= 1) {
            g = factorial(x - 1);
        } else {
            if (p == 0)
                throw PoleError("Gamma pole at a fixed non-positive integer");
            long m = -x;
            g = Rational(m % 2 == 0 ? 1 : -1) / (factorial(m) * p);
            order_ -= power;
        }
        value_ = power > 0 ? Rational(value_ * g) : Rational(value_ / g);
    }

    // Gamma(1 - a + m)^power, relative to Gamma(1 - a).
    void a_term(long m, int power)
    {
        Rational g = m >= 0 ? rising(Rational(1 - a_), static_cast<int>(m))
                            : Rational(1 / checked(rising(Rational(1 - a_ + m), static_cast<int>(-m))));
        if (g == 0)
            throw PoleError("Gamma pole in the a-dependent factor");
        value_ = power > 0 ? Rational(value_ * g) : Rational(value_ / g);
        gamma_a_ += power;
    }

    Rational finish(int expected_gamma_a) const
    {
        if (order_ != 0)
            throw PoleError("Gamma product does not have a finite limit");
        if (gamma_a_ != expected_gamma_a)
            throw std::logic_error("unbalanced Gamma(1-a) count");
        return value_;
    }

private:
    static Rational factorial(long m)
    {
        Rational f = 1;
        for (long t = 2; t <= m; ++t)
            f *= t;
        return f;
    }

    static const Rational& checked(const Rational& x)
    {
        if (x == 0)
            throw PoleError("Gamma pole in the a-dependent factor");
        return x;
    }

    Rational a_;
    long kappa_;
    Rational value_ = 1;
    int order_ = 0;
    int gamma_a_ = 0;
};

long integer_kappa(const Rational& kappa)
{
    if (!is_integer(kappa) || kappa < 0)
        throw std::invalid_argument("the closed norm formula needs a non-negative integer kappa");
    return kappa.get_num().get_si();
}

} // namespace

Rational norm_constant_reduced(const BesselParams& p)
{
    const long k = integer_kappa(p.kappa);
    const int n = p.n;
    GammaProduct g(p.a, k);
    for (int i = 1; i <= n; ++i) {
        g.kappa_term(i, 0, 1);
        g.kappa_term(1, 0, -1);
        g.a_term(-k * (n + i - 2), 1);
    }
    Rational nfact = 1;
    for (int i = 2; i <= n; ++i)
        nfact *= i;
    return g.finish(n) * pow(Rational(2), static_cast<int>(k * n * (n - 1))) * nfact;
}

Rational norm_full_reduced(const Partition& lambda, const BesselParams& p)
{
    const long k = integer_kappa(p.kappa);
    const int n = p.n;
    if (lambda.length() > n)
        throw std::invalid_argument("partition " + to_string(lambda) + " is longer than n");
    const std::vector<int> l = lambda.padded(n);
    GammaProduct g(p.a, k);
    for (int i = 1; i <= n; ++i) {
        const long li = l[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            const long lj = l[static_cast<std::size_t>(j - 1)];
            const long d = li - lj, s = li + lj, c = 2 * n - i - j;
            g.kappa_term(j - i + 1, d, 1);
            g.kappa_term(j - i - 1, 1 + d, 1);
            g.kappa_term(j - i, d, -1);
            g.kappa_term(j - i, 1 + d, -1);
            g.a_term(1 - k * c - s, 1);
            g.a_term(1 - k * (c + 1) - s, -1);
            g.a_term(-k * c - s, 1);
            g.a_term(-k * (c - 1) - s, -1);
        }
        g.a_term(1 - 2 * k * (n - i) - 2 * li, 1);
        g.a_term(-2 * k * (n - i) - 2 * li, 1);
        g.a_term(1 - k * (n - i) - li, -1);
        g.kappa_term(n - i, 1 + li, 1);
    }
    Rational nfact = 1;
    for (int i = 2; i <= n; ++i)
        nfact *= i;
    return g.finish(n) * pow(Rational(2), static_cast<int>(2 * lambda.weight() + k * n * (n - 1))) * nfact;
}

} // namespace besselpoly
