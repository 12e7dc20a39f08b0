#include "besselpoly/errors.hpp"
#include "besselpoly/orthogonality.hpp"
#include "besselpoly/pieri_norms.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("orthogonality")
{
    TEST_CASE("square-integrability condition")
    {
        CHECK(check_L2_condition(2, BesselParams{-20, 1, 2}));
        CHECK_FALSE(check_L2_condition(4, BesselParams{-15, 2, 3}));
        CHECK(check_L2_condition(4, BesselParams{-16, 2, 3}));
    }

    TEST_CASE("one-variable moments")
    {
        const Rational a(-31, 2);
        CHECK(moment_1d(0, a) == 1);
        CHECK(moment_1d(1, a) == -2 / a);
        CHECK(moment_1d(2, a) == 4 / (a * (a + 1)));
        CHECK_NOTHROW(moment_1d(3, -3));
        CHECK_THROWS_AS(moment_1d(4, -3), ConvergenceError);
    }

    TEST_CASE("inner products")
    {
        for (const Rational a : {Rational(-20), Rational(-31, 2)}) {
            const SymPoly one2 = SymPoly::monomial(2, Partition{});
            CHECK(inner_product(one2, one2, BesselParams{a, 1, 2}) == -8 / (a * a * (a + 1)));
            const BesselParams p1{a, 0, 1};
            const SymPoly y = bessel_expand(Partition{1}, p1).monomials();
            CHECK(inner_product(y, y, p1) == -4 / (a * a * (a + 1)));
        }
        const SymPoly big = SymPoly::monomial(1, Partition{5});
        CHECK_THROWS_AS(inner_product(big, big, BesselParams{-5, 0, 1}), ConvergenceError);
        CHECK_THROWS_AS(inner_product(big, big, BesselParams{-20, Rational(1, 2), 1}), std::invalid_argument);
    }

    TEST_CASE("Gram matrices")
    {
        const GramMatrix g = gram_matrix(1, BesselParams{-20, 0, 1});
        REQUIRE(g.basis.size() == 2);
        CHECK(g.entries[0][0] == 1);
        CHECK(g.entries[1][1] == Rational(1, 1900));
        CHECK(g.entries[0][1] == 0);
        for (const auto& p : {BesselParams{-20, 1, 2}, BesselParams{-31, 2, 2}, BesselParams{-20, 1, 3}}) {
            const GramMatrix m = gram_matrix(2, p);
            for (std::size_t i = 0; i < m.basis.size(); ++i)
                for (std::size_t j = 0; j < m.basis.size(); ++j)
                    CHECK(m.entries[i][j] == (i == j ? norm_full_reduced(m.basis[i], p) : Rational(0)));
        }
        CHECK_THROWS_AS(gram_matrix(4, BesselParams{-15, 2, 3}), ConvergenceError);
    }

    TEST_CASE("higher operators are symmetric")
    {
        const BesselParams p{-20, 1, 2};
        const auto basis = partitions_up_to(2, 2);
        for (int d = 1; d <= 2; ++d)
            for (const auto& l : basis)
                for (const auto& m : basis)
                    CHECK(symmetry_check(d, SymPoly::monomial(2, l), SymPoly::monomial(2, m), p));
    }

    TEST_CASE("two-variable moment table")
    {
        const MomentTable2 table(6, -20, 1);
        CHECK(table.consistent());
        CHECK(table.at(0, 0) == 1);
        CHECK(table.at(1, 0) == Rational(2, 9));
        CHECK(table.at(0, 1) == Rational(2, 171));
        CHECK_THROWS_AS(table.at(7, 0), std::out_of_range);
        const MomentTable2 literal(6, -20, 1, Reading::Literal);
        CHECK(literal.at(1, 0) != table.at(1, 0));
    }

    TEST_CASE("elementary rewriting")
    {
        SymPoly f = SymPoly::monomial(2, Partition{2});
        const auto e = to_elementary2(f);
        CHECK(e.at({2, 0}) == 1);
        CHECK(e.at({0, 1}) == -2);
        CHECK(e.size() == 2);
        CHECK_THROWS_AS(to_elementary2(SymPoly::monomial(3, Partition{1})), std::invalid_argument);
    }

    TEST_CASE("the functional matches the integral")
    {
        const BesselParams p{-20, 1, 2};
        const MomentTable2 table(6, p.a, p.kappa);
        const SymPoly one = SymPoly::monomial(2, Partition{});
        const Rational norm = inner_product(one, one, p);
        for (const auto& l : partitions_up_to(5, 2)) {
            const SymPoly m = SymPoly::monomial(2, l);
            CHECK(functional_apply(m, table) == inner_product(m, one, p) / norm);
        }
        for (const auto& l : partitions_up_to(2, 2))
            for (const auto& m : partitions_up_to(2, 2))
                if (l != m)
                    CHECK(functional_apply(bessel_expand(l, p).monomials() * bessel_expand(m, p).monomials(), table) == 0);
    }
}
