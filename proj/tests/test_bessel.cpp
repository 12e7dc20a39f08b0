#include "besselpoly/bessel.hpp"
#include "besselpoly/errors.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("bessel")
{
    TEST_CASE("eigenvalues")
    {
        const BesselParams p{Rational(-31, 2), Rational(3, 4), 2};
        CHECK(bessel_eigenvalue(Partition{}, p) == 0);
        CHECK(bessel_eigenvalue(Partition{1}, p) == p.a + 2 * p.kappa);
        CHECK(bessel_eigenvalue(Partition{2, 1}, p) == eigenvalue_d(Partition{2, 1}, p.kappa, 2) + 3 * p.a);
        const auto rho = rho_vector(p);
        CHECK(rho[0] == p.kappa + (p.a - 1) / 2);
        CHECK(rho[1] == (p.a - 1) / 2);
    }

    TEST_CASE("nondegeneracy")
    {
        const BesselParams good{-20, 1, 2};
        const auto ok = check_nondegenerate(Partition{2, 1}, good);
        CHECK(ok.nondegenerate);
        CHECK(ok.sufficient_condition);
        const BesselParams bad{-2, 1, 2};
        const auto report = check_nondegenerate(Partition{1}, bad);
        CHECK_FALSE(report.nondegenerate);
        REQUIRE(report.collision.has_value());
        CHECK(*report.collision == Partition{});
        CHECK_THROWS_AS(bessel_expand(Partition{1}, bad), DegenerateEigenvalue);
    }

    TEST_CASE("low degree polynomials")
    {
        const BesselParams one{-20, 1, 1};
        SymPoly y1 = SymPoly::monomial(1, Partition{1});
        y1.add_term(Partition{}, Rational(-1, 10));
        CHECK(bessel_expand(Partition{1}, one).monomials() == y1);

        const BesselParams two{-20, 1, 2};
        SymPoly y2 = SymPoly::monomial(2, Partition{1});
        y2.add_term(Partition{}, Rational(-2, 9));
        CHECK(bessel_expand(Partition{1}, two).monomials() == y2);
        CHECK(bessel_expand(Partition{1}, two).constant_term() == Rational(-2, 9));
    }

    TEST_CASE("tableau coefficients agree with the recurrence")
    {
        const BesselParams p{Rational(-31, 2), Rational(2), 2};
        CHECK(bessel_coeff_tableau(Partition{1}, Partition{}, p) == 4 / (p.a + 2 * p.kappa));
        for (const auto& q : sample_params())
            for (const auto& lambda : partitions_up_to(3, q.n)) {
                const auto& y = bessel_expand(lambda, q);
                CHECK(y.jack_coeffs.coeff(lambda) == 1);
                for (const auto& mu : subpartitions(lambda))
                    CHECK(bessel_coeff_tableau(lambda, mu, q) == y.jack_coeffs.coeff(mu));
            }
    }

    TEST_CASE("renormalized polynomials have unit constant term")
    {
        const BesselParams one{Rational(-7, 3), 1, 1};
        SymPoly expected = SymPoly::monomial(1, Partition{});
        expected.add_term(Partition{1}, one.a / 2);
        CHECK(renormalize(bessel_expand(Partition{1}, one)).monomials() == expected);
        for (const auto& q : sample_params())
            for (const auto& lambda : partitions_up_to(3, q.n))
                CHECK(renormalize(bessel_expand(lambda, q)).constant_term() == 1);
    }

    TEST_CASE("one variable reproduces the classical generalized Bessel polynomials")
    {
        for (const Rational a : {Rational(-20), Rational(-31, 2), Rational(7, 3)}) {
            const BesselParams p{a, 1, 1};
            std::vector<SymPoly> y;
            for (int k = 0; k <= 5; ++k) {
                SymPoly expected(1);
                Rational c = 1;
                for (int j = 0; j <= k; ++j) {
                    expected.add_term(Partition{j}, c);
                    c *= Rational(k - j, j + 1) * (k + a - 1 + j) / 2;
                }
                y.push_back(renormalize(bessel_expand(Partition{k}, p)).monomials());
                CHECK(y.back() == expected);
            }
            const SymPoly x = SymPoly::monomial(1, Partition{1});
            for (int k = 1; k < 5; ++k) {
                const Rational s = 2 * k + a;
                const SymPoly lhs = y[k + 1] * ((k + a - 1) * (s - 2));
                SymPoly rhs = y[k] * ((s - 1) * (a - 2));
                rhs += x * y[k] * ((s - 2) * s * (s - 1) / 2);
                rhs += y[k - 1] * (k * s);
                CHECK(lhs == rhs);
            }
        }
    }

    TEST_CASE("rectangular shapes")
    {
        for (const auto& q : sample_params()) {
            CHECK(rectangular_2F0(0, q).monomials() == SymPoly::monomial(q.n, Partition{}));
            if (q.n <= 2)
                for (int k = 1; k <= 2; ++k)
                    CHECK(rectangular_2F0(k, q).jack_coeffs == bessel_expand(rectangle(k, q.n), q).jack_coeffs);
        }
    }

    TEST_CASE("invalid input")
    {
        CHECK_THROWS_AS(bessel_expand(Partition{1, 1, 1}, BesselParams{-20, 1, 2}), std::invalid_argument);
    }
}
