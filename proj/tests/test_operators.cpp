#include "besselpoly/operators.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("operators")
{
    TEST_CASE("the Bessel operator on low degree")
    {
        const BesselParams p{Rational(-31, 2), Rational(3, 2), 2};
        SymPoly expected = SymPoly::monomial(2, Partition{1}, p.a + 2 * p.kappa);
        expected.add_term(Partition{}, 4);
        CHECK(apply_DB_direct(SymPoly::monomial(2, Partition{1}), p) == expected);
        CHECK(apply_DB_direct(SymPoly::monomial(2, Partition{}), p).is_zero());

        JackExpansion p1(2, p.kappa);
        p1.add_term(Partition{1}, 1);
        JackExpansion image(2, p.kappa);
        image.add_term(Partition{1}, p.a + 2 * p.kappa);
        image.add_term(Partition{}, 4);
        CHECK(apply_DB_jack(p1, p) == image);
    }

    TEST_CASE("both routes to the Bessel operator agree")
    {
        for (const auto& p : sample_params())
            for (const auto& lambda : partitions_up_to(3, p.n)) {
                const SymPoly m = SymPoly::monomial(p.n, lambda);
                CHECK(from_jack(apply_DB_jack(to_jack(m, p.kappa), p)) == apply_DB_direct(m, p));
            }
    }

    TEST_CASE("the first higher operator is the Bessel operator")
    {
        for (const auto& p : sample_params())
            for (const auto& lambda : partitions_up_to(3, p.n)) {
                const SymPoly m = SymPoly::monomial(p.n, lambda);
                CHECK(apply_higher(1, m, p) == apply_DB_direct(m, p));
            }
    }

    TEST_CASE("higher operators commute")
    {
        const BesselParams p{-20, 1, 2};
        CHECK(commutator_check(1, 2, 3, p));
        CHECK(commutator_check(1, 3, 2, p));
        CHECK(commutator_check(2, 3, 2, p));
    }

    TEST_CASE("Bessel polynomials are joint eigenfunctions")
    {
        const BesselParams p{-20, 1, 2};
        for (const auto& lambda : partitions_up_to(3, 2))
            for (int d = 1; d <= 2; ++d)
                CHECK(eigenvalue_of(d, lambda, p) == leading_eigenvalue(d, lambda, p));
        CHECK(eigenvalue_of(1, Partition{2, 1}, p) == bessel_eigenvalue(Partition{2, 1}, p));
    }

    TEST_CASE("d_max bounds the order")
    {
        const BesselParams p{-20, 1, 2};
        CHECK_THROWS_AS(apply_higher(4, SymPoly::monomial(2, Partition{}), p), std::invalid_argument);
    }

    TEST_CASE("eigenvalue polynomials")
    {
        const BesselParams p{-20, 1, 2};
        const auto rho = rho_vector(p);
        const GammaPolynomial g1 = gamma_poly(1, p);
        CHECK(g1.even_symmetric);
        for (const auto& z : std::vector<std::vector<Rational>>{{Rational(1, 3), Rational(-5, 2)}, {7, 0}, {-2, 9}}) {
            Rational expected = 0;
            for (std::size_t i = 0; i < z.size(); ++i)
                expected += z[i] * z[i] - rho[i] * rho[i];
            CHECK(evaluate_gamma(g1, z) == expected);
        }
        const GammaPolynomial g2 = gamma_poly(2, p);
        CHECK(g2.even_symmetric);
        for (const auto& lambda : partitions_up_to(6, 2)) {
            const auto parts = lambda.padded(2);
            std::vector<Rational> z{parts[0] + rho[0], parts[1] + rho[1]};
            CHECK(evaluate_gamma(g2, z) == leading_eigenvalue(2, lambda, p));
        }
    }

    TEST_CASE("joint spectrum separation")
    {
        CHECK(separation_check(3, BesselParams{-20, 1, 2}));
        CHECK_FALSE(separation_check(3, BesselParams{1, -2, 2}));
    }
}
