#include "besselpoly/differential.hpp"
#include "besselpoly/errors.hpp"
#include "besselpoly/jack.hpp"

#include "doctest.h"

using namespace besselpoly;

namespace {

const Rational kappas[] = {Rational(1, 2), Rational(1), Rational(2), Rational(5, 3)};

JackExpansion single(int n, const Rational& kappa, const Partition& lambda)
{
    JackExpansion v(n, kappa);
    v.add_term(lambda, 1);
    return v;
}

} // namespace

TEST_SUITE("jack")
{
    TEST_CASE("small Jack polynomials")
    {
        const Rational k(3, 7);
        CHECK(jack_in_monomials(Partition{1, 1}, k, 2) == SymPoly::monomial(2, Partition{1, 1}));
        SymPoly two = SymPoly::monomial(2, Partition{2});
        two.add_term(Partition{1, 1}, 2 * k / (1 + k));
        CHECK(jack_in_monomials(Partition{2}, k, 2) == two);
        CHECK(jack_in_monomials(Partition{2}, Rational(1, 2), 2).coeff(Partition{1, 1}) == Rational(2, 3));
    }

    TEST_CASE("Jack polynomials are monic, triangular and D_2 eigenfunctions")
    {
        for (const auto& kappa : kappas)
            for (int n = 1; n <= 3; ++n)
                for (const auto& lambda : partitions_up_to(5, n)) {
                    const SymPoly& p = jack_in_monomials(lambda, kappa, n);
                    CHECK(p.coeff(lambda) == 1);
                    for (const auto& [mu, c] : p.coeffs())
                        CHECK(dominance_leq(mu, lambda));
                    CHECK(apply_direct(jack_operator_D(2, kappa), p) == p * eigenvalue_d(lambda, kappa, n));
                }
    }

    TEST_CASE("eigenvalues")
    {
        const Rational k(5, 3);
        CHECK(eigenvalue_d(Partition{2}, k, 2) == 2 + 4 * k);
        CHECK(eigenvalue_d(Partition{1, 1}, k, 2) == 2 * k);
        CHECK(eigenvalue_d(Partition{}, k, 2) == 0);
    }

    TEST_CASE("hook products")
    {
        const Rational k(2, 9);
        CHECK(hook_products(Partition{1}, k).lower == 1);
        CHECK(hook_products(Partition{2}, k).lower == 2);
        CHECK(hook_products(Partition{1, 1}, k).lower == 1 + k);
    }

    TEST_CASE("principal specialization")
    {
        const Rational k(2, 9);
        CHECK(principal_spec(Partition{1}, k, 4) == 4);
        CHECK(principal_spec(Partition{2}, k, 2) == 2 * (1 + 2 * k) / (1 + k));
        CHECK(principal_spec(Partition{2}, 1, 2) == 3);
        for (const auto& kappa : kappas)
            for (int n = 1; n <= 3; ++n)
                for (const auto& lambda : partitions_up_to(4, n))
                    CHECK(principal_spec(lambda, kappa, n) == evaluate_at_ones(jack_in_monomials(lambda, kappa, n)));
    }

    TEST_CASE("at kappa = 0 the Jack polynomials are monomials")
    {
        for (int n = 1; n <= 3; ++n)
            for (const auto& lambda : partitions_up_to(4, n)) {
                CHECK(jack_in_monomials(lambda, 0, n) == SymPoly::monomial(n, lambda));
                CHECK(principal_spec(lambda, 0, n) == evaluate_at_ones(SymPoly::monomial(n, lambda)));
            }
    }

    TEST_CASE("Pieri coefficients")
    {
        const Rational k(4, 5);
        CHECK(psi_prime(Partition{1}, 1, k) == 1);
        CHECK(psi_prime(Partition{1}, 2, k) == 2 / (k + 1));
        CHECK(psi_prime(Partition{1}, 2, 1) == 1);
    }

    TEST_CASE("co-cover binomials")
    {
        const Rational k(4, 5);
        CHECK(binomial_cocover(Partition{}, 1, k) == 1);
        CHECK(binomial_cocover(Partition{1}, 1, k) == 2);
        CHECK(binomial_cocover(Partition{1}, 2, k) == 2);
        CHECK(binomial_cocover(Partition{1, 1}, 1, k) == (2 + k) / (1 + k));
    }

    TEST_CASE("three routes to the co-cover binomial agree and do not depend on n")
    {
        for (const auto& kappa : kappas)
            for (int n = 1; n <= 3; ++n)
                for (const auto& lambda : partitions_up_to(4, n))
                    for (const auto& cover : co_covers(lambda, n, Direction::Up)) {
                        const Rational b = binomial_cocover(lambda, cover.row, kappa);
                        CHECK(b == binomial_from_E0(lambda, cover.row, kappa, n));
                        CHECK(b == binomial_from_E0(lambda, cover.row, kappa, n + 1));
                        CHECK(b == binomial_cocover_closed(lambda, cover.row, kappa, n, Reading::Corrected));
                        CHECK(b == binomial_cocover_closed(lambda, cover.row, kappa, n + 1, Reading::Corrected));
                    }
    }

    TEST_CASE("the literal closed products disagree with the direct routes")
    {
        const Rational k(4, 5);
        int binomial_misses = 0, ratio_misses = 0;
        for (const auto& lambda : partitions_up_to(3, 2))
            for (const auto& cover : co_covers(lambda, 2, Direction::Up)) {
                try {
                    binomial_misses += binomial_cocover_closed(lambda, cover.row, k, 2, Reading::Literal)
                        != binomial_cocover(lambda, cover.row, k);
                } catch (const PoleError&) {
                    ++binomial_misses;
                }
                try {
                    ratio_misses += spec_ratio_closed(lambda, cover.row, k, 2, Reading::Literal)
                        != spec_ratio_cocover(lambda, cover.row, k, 2);
                } catch (const PoleError&) {
                    ++ratio_misses;
                }
            }
        CHECK(binomial_misses > 0);
        CHECK(ratio_misses > 0);
    }

    TEST_CASE("specialization ratios")
    {
        const Rational k(4, 5);
        CHECK(spec_ratio_cocover(Partition{}, 1, k, 3) == 3);
        CHECK(spec_ratio_cocover(Partition{1}, 1, k, 2) == (1 + 2 * k) / (1 + k));
        CHECK(spec_ratio_cocover(Partition{1}, 2, k, 2) == Rational(1, 2));
        for (const auto& kappa : kappas)
            for (int n = 1; n <= 3; ++n)
                for (const auto& lambda : partitions_up_to(4, n))
                    for (const auto& cover : co_covers(lambda, n, Direction::Up))
                        CHECK(spec_ratio_cocover(lambda, cover.row, kappa, n)
                              == spec_ratio_closed(lambda, cover.row, kappa, n, Reading::Corrected));
    }

    TEST_CASE("basic operator actions")
    {
        const Rational k(4, 5);
        JackExpansion e1 = apply_basic(BasicOperator::E1, single(2, k, Partition{2, 1}));
        CHECK(e1 == single(2, k, Partition{2, 1}) * Rational(3));
        CHECK(apply_basic(BasicOperator::E0, single(2, k, Partition{1})) == single(2, k, Partition{}) * Rational(2));
        CHECK(apply_basic(BasicOperator::MulP1, single(2, k, Partition{})) == single(2, k, Partition{1}));
    }

    TEST_CASE("basic actions agree with direct differentiation")
    {
        for (const auto& kappa : kappas)
            for (int n = 1; n <= 3; ++n)
                for (const auto& lambda : partitions_up_to(4, n)) {
                    const JackExpansion v = single(n, kappa, lambda);
                    const SymPoly p = jack_in_monomials(lambda, kappa, n);
                    const MultiPoly f = expand(p);
                    MultiPoly e0(n);
                    for (int i = 0; i < n; ++i)
                        e0 += f.derivative(i);
                    CHECK(from_jack(apply_basic(BasicOperator::E0, v)) == collect_symmetric(e0));
                    CHECK(from_jack(apply_basic(BasicOperator::E1, v)) == collect_symmetric(apply_E(1, f)));
                    CHECK(from_jack(apply_basic(BasicOperator::D1, v)) == apply_direct(jack_operator_D(1, kappa), p));
                    CHECK(from_jack(apply_basic(BasicOperator::MulP1, v)) == power_sum(1, n) * p);
                }
    }

    TEST_CASE("basis conversion round trip")
    {
        for (const auto& kappa : kappas) {
            SymPoly f(3);
            for (const auto& lambda : partitions_up_to(4, 3))
                f.add_term(lambda, Rational(lambda.weight() + 1, lambda.length() + 2));
            CHECK(from_jack(to_jack(f, kappa)) == f);
        }
    }

    TEST_CASE("generalized Pochhammer symbols")
    {
        const Rational a(7, 3), k(1, 4);
        CHECK(gen_pochhammer(a, Partition{1}, k) == a);
        CHECK(gen_pochhammer(-1, Partition{2}, k) == 0);
        CHECK(gen_pochhammer(a, Partition{1, 1}, k) == a * (a - k));
    }

    TEST_CASE("truncated hypergeometric series")
    {
        JackExpansion exp0 = hyperg_trunc({}, {}, 1, 1, 1, 1);
        CHECK(exp0.coeff(Partition{}) == 1);
        CHECK(exp0.coeff(Partition{1}) == 1);
        const Rational a(-20);
        JackExpansion f = hyperg_trunc({-1, a}, {}, Rational(-1, 2), 1, 1, 3);
        CHECK(from_jack(f) == SymPoly::monomial(1, Partition{}) + SymPoly::monomial(1, Partition{1}, a / 2));
        CHECK_THROWS_AS(hyperg_trunc({1}, {Rational(2)}, 1, 2, 2, 2), PoleError);
    }

    TEST_CASE("2F1 satisfies its differential equation below the truncation degree")
    {
        const Rational a1(-1, 3), a2(2, 5), b1(7, 4), k(2);
        const int n = 2, top = 4;
        const JackExpansion f = hyperg_trunc({a1, a2}, {b1}, 1, k, n, top);
        JackExpansion lhs = apply_basic(BasicOperator::D1, f) - apply_basic(BasicOperator::D2, f);
        lhs += apply_basic(BasicOperator::E0, f) * (b1 - k * (n - 1));
        lhs -= apply_basic(BasicOperator::E1, f) * (a1 + a2 + 1 - k * (n - 1));
        lhs -= f * (n * a1 * a2);
        for (const auto& [mu, c] : lhs.coeffs)
            if (mu.weight() < top)
                CHECK(c == 0);
    }
}
