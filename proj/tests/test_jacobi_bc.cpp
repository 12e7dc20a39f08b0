#include "besselpoly/bessel.hpp"
#include "besselpoly/jacobi_bc.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("jacobi_bc")
{
    TEST_CASE("eigenvalues")
    {
        const JacobiParams jp{Rational(1, 3), Rational(2, 7), Rational(3, 5), 2};
        CHECK(jacobi_eigenvalue(Partition{1}, jp) == 2 * jp.k3 + jp.k1 + 2 * jp.k2 + 1);
        CHECK(jacobi_eigenvalue(Partition{}, jp) == 0);
    }

    TEST_CASE("one variable, degree one")
    {
        const JacobiParams jp{Rational(5, 2), Rational(-1, 3), Rational(2), 1};
        const JackExpansion v = jacobi_expand(Partition{1}, jp);
        CHECK(v.coeff(Partition{1}) == -4);
        CHECK(v.coeff(Partition{}) == 4 * (jp.k1 + jp.k2 + Rational(1, 2)) / (jp.k1 + 2 * jp.k2 + 1));
        CHECK(jacobi_constant_term(Partition{1}, jp) == v.coeff(Partition{}));
    }

    TEST_CASE("eigen equation and constant term")
    {
        for (const auto& jp : {JacobiParams{Rational(1, 3), Rational(2, 7), Rational(3, 5), 2},
                               JacobiParams{Rational(-7, 4), Rational(9, 5), Rational(4, 3), 2},
                               JacobiParams{Rational(1, 3), Rational(2, 7), Rational(1, 2), 3}})
            for (const auto& lambda : partitions_up_to(3, jp.n)) {
                const JackExpansion v = jacobi_expand(lambda, jp);
                const Rational e = jacobi_eigenvalue(lambda, jp);
                CHECK(v.coeff(lambda) == pow(Rational(-4), lambda.weight()));
                CHECK(apply_DBC_jack(v, jp) == v * e);
                CHECK(apply_DBC_direct(from_jack(v), jp) == from_jack(v) * e);
                CHECK(jacobi_constant_term(lambda, jp) == v.coeff(Partition{}));
            }
    }

    TEST_CASE("limit parameters")
    {
        const JacobiParams jp = limit_params(-20, 1, 1, 2);
        CHECK(jp.k1 == Rational(-19, 2));
        CHECK(jp.k2 == Rational(-23, 4));
        CHECK(jp.k3 == 1);
        for (const Rational E : {Rational(1), Rational(7, 2), Rational(40)}) {
            const BesselParams p{Rational(-31, 2), 2, 3};
            CHECK(rho_bc(limit_params(p.a, p.kappa, E, p.n)) == rho_vector(p));
        }
        CHECK_THROWS_AS(limit_params(-20, 1, 0, 2), std::invalid_argument);
    }
}
