#include "besselpoly/errors.hpp"
#include "besselpoly/factored_fraction.hpp"
#include "besselpoly/polynomial.hpp"

#include "doctest.h"

#include <random>

using namespace besselpoly;

namespace {

MultiPoly x(int n, int i)
{
    return MultiPoly::variable(n, i);
}

MultiPoly random_poly(std::mt19937& rng, int n, int degree)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exponent(0, degree);
    MultiPoly f(n);
    for (int t = 0; t < 4; ++t) {
        Exponent e(static_cast<std::size_t>(n));
        for (auto& k : e)
            k = exponent(rng);
        f.add_term(e, coeff(rng));
    }
    return f;
}

} // namespace

TEST_SUITE("polyalg")
{
    TEST_CASE("rational parsing and printing")
    {
        CHECK(parse_rational("-31/2") == Rational(-31, 2));
        CHECK(parse_rational("4/6") == Rational(2, 3));
        CHECK(to_string(Rational(-20)) == "-20");
        CHECK(to_string(Rational(1, 1900)) == "1/1900");
        CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK(rising(Rational(3), 2) == 12);
        CHECK(falling(Rational(3), 2) == 6);
    }

    TEST_CASE("products and identities")
    {
        const MultiPoly f = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
        CHECK(f == x(2, 0).pow(2) - x(2, 1).pow(2));
        CHECK(f + MultiPoly(2) == f);
        CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
    }

    TEST_CASE("exact division")
    {
        const MultiPoly d = variable_difference(2, 0, 1);
        CHECK(divide_exact(x(2, 0).pow(2) - x(2, 1).pow(2), d) == x(2, 0) + x(2, 1));
        CHECK(divide_exact(x(2, 0).pow(3) - x(2, 1).pow(3), d)
              == x(2, 0).pow(2) + x(2, 0) * x(2, 1) + x(2, 1).pow(2));
        CHECK_THROWS_AS(divide_exact(x(2, 0).pow(2) + x(2, 1).pow(2), d), NotDivisible);
    }

    TEST_CASE("division undoes multiplication")
    {
        std::mt19937 rng(7);
        for (int t = 0; t < 40; ++t) {
            const MultiPoly f = random_poly(rng, 3, 3);
            MultiPoly g = random_poly(rng, 3, 2);
            if (g.is_zero())
                g = MultiPoly::constant(3, 1);
            CHECK(divide_exact(f * g, g) == f);
        }
    }

    TEST_CASE("collecting symmetric polynomials")
    {
        const MultiPoly f = x(2, 0).pow(2) + x(2, 1).pow(2) + x(2, 0) * x(2, 1) * Rational(3);
        const SymPoly s = collect_symmetric(f);
        CHECK(s.coeffs().size() == 2);
        CHECK(s.coeff(Partition{2}) == 1);
        CHECK(s.coeff(Partition{1, 1}) == 3);
        CHECK_THROWS_AS(collect_symmetric(x(2, 0)), NotSymmetric);
        CHECK(collect_symmetric(MultiPoly(2)).is_zero());
    }

    TEST_CASE("expand and collect are inverse")
    {
        for (const auto& lambda : partitions_up_to(5, 3)) {
            SymPoly s = SymPoly::monomial(3, lambda, Rational(2, 3));
            s.add_term(Partition{1}, -5);
            CHECK(collect_symmetric(expand(s)) == s);
            const MultiPoly e = expand(s);
            CHECK(e.permuted(std::vector<int>{1, 2, 0}) == e);
            CHECK(e.permuted(std::vector<int>{1, 0, 2}) == e);
        }
    }

    TEST_CASE("elementary and power sums")
    {
        CHECK(elementary(2, 2) == SymPoly::monomial(2, Partition{1, 1}));
        CHECK(power_sum(1, 3) == SymPoly::monomial(3, Partition{1}));
        CHECK(elementary(0, 3) == SymPoly::monomial(3, Partition{}));
        CHECK(power_sum(2, 2) == SymPoly::monomial(2, Partition{2}));
        CHECK_THROWS_AS(elementary(3, 2), std::invalid_argument);
        CHECK_THROWS_AS(power_sum(0, 2), std::invalid_argument);
        CHECK(evaluate_at_ones(elementary(2, 4)) == 6);
        CHECK(orbit_size(Partition{2, 1}, 3) == 6);
    }

    TEST_CASE("factored fractions")
    {
        const FactoredFraction one(MultiPoly::constant(2, 1));
        const FactoredFraction sum = one.divided_by_var(0) + one.divided_by_var(1);
        CHECK(sum.var_pow(0) == 1);
        CHECK(sum.var_pow(1) == 1);
        CHECK(sum.numerator() == x(2, 0) + x(2, 1));
        CHECK_FALSE(sum.is_polynomial());
        CHECK_THROWS_AS(sum.to_poly(), NotDivisible);

        FactoredFraction q = FactoredFraction(x(2, 0).pow(2) - x(2, 1).pow(2)).divided_by_difference(0, 1);
        CHECK(q.to_poly() == x(2, 0) + x(2, 1));
        FactoredFraction r = FactoredFraction(x(2, 1) - x(2, 0)).divided_by_difference(1, 0);
        CHECK(r.to_poly() == MultiPoly::constant(2, 1));
    }

    TEST_CASE("factored arithmetic matches cross multiplication")
    {
        std::mt19937 rng(11);
        for (int t = 0; t < 20; ++t) {
            const MultiPoly f = random_poly(rng, 3, 2);
            const MultiPoly g = random_poly(rng, 3, 2);
            const FactoredFraction a = FactoredFraction(f).divided_by_var(0).divided_by_difference(1, 2);
            const FactoredFraction b = FactoredFraction(g).divided_by_difference(0, 1);
            const FactoredFraction s = a + b;
            const MultiPoly d01 = variable_difference(3, 0, 1);
            const MultiPoly d12 = variable_difference(3, 1, 2);
            const MultiPoly common = x(3, 0) * d01 * d12;
            CHECK((s * common).to_poly() == f * d01 + g * x(3, 0) * d12);
            CHECK((a * b).equals(FactoredFraction(f * g).divided_by_var(0).divided_by_difference(1, 2).divided_by_difference(0, 1)));
        }
    }

    TEST_CASE("euler operator on fractions agrees with the quotient rule")
    {
        const FactoredFraction f = FactoredFraction(x(2, 0).pow(3)).divided_by_difference(0, 1);
        const FactoredFraction e = f.euler(0);
        const MultiPoly d = variable_difference(2, 0, 1);
        // x^3/(x-y) -> x(3x^2(x-y) - x^3)/(x-y)^2
        const MultiPoly expected = x(2, 0) * (x(2, 0).pow(2) * d * Rational(3) - x(2, 0).pow(3));
        CHECK((e * d * d).to_poly() == expected);
    }
}
