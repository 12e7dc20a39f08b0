#include "besselpoly/errors.hpp"
#include "besselpoly/pieri_norms.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("pieri_norms")
{
    TEST_CASE("coefficient functions")
    {
        CHECK(v_hat(2, 1) == Rational(3, 2));
        CHECK(v_hat(Rational(1, 2), 3) == 7);
        CHECK_THROWS_AS(v_hat(0, 1), PoleError);
        CHECK(w_hat(1, -20) == Rational(-19, 12));
        CHECK_THROWS_AS(w_hat(Rational(-1, 2), -20), PoleError);
    }

    TEST_CASE("shift ratios in one variable")
    {
        for (const Rational a : {Rational(-20), Rational(-31, 2), Rational(5, 3)}) {
            const BesselParams p{a, 1, 1};
            CHECK(delta_ratio(Sign::Plus, Partition{1}, p) == 1 / a);
            CHECK(delta_ratio(Sign::Plus, Partition{}, p) == 1);
        }
    }

    TEST_CASE("elementary factors")
    {
        CHECK(E_hat_r(1, 2) == SymPoly::monomial(2, Partition{1}, Rational(1, 2)));
        CHECK(E_hat_r(2, 2) == SymPoly::monomial(2, Partition{1, 1}, Rational(1, 4)));
        CHECK_THROWS_AS(E_hat_r(3, 2), std::invalid_argument);
    }

    TEST_CASE("Pieri expansions")
    {
        std::vector<BesselParams> params{{-20, 1, 1}, {Rational(-7, 3), 1, 1}};
        for (const auto& p : sample_params())
            params.push_back(p);
        for (const auto& p : params)
            for (const auto& lambda : partitions_up_to(2, p.n))
                for (int r = 1; r <= p.n; ++r) {
                    const PieriReport report = pieri_verify(r, lambda, p);
                    CHECK_MESSAGE(report.ok, report.mismatch);
                }
    }

    TEST_CASE("norm routes agree")
    {
        for (int n = 1; n <= 3; ++n)
            for (int kappa : {1, 2})
                for (int a : {-20, -31}) {
                    const BesselParams p{a, kappa, n};
                    for (const auto& lambda : partitions_up_to(3, n)) {
                        CHECK(norm_ratio(lambda, p) == norm_ratio_pochhammer(lambda, p));
                        CHECK(norm_full_reduced(lambda, p) == norm_ratio(lambda, p) * norm_constant_reduced(p));
                    }
                }
    }

    TEST_CASE("norm constants")
    {
        for (const Rational a : {Rational(-20), Rational(-31)})
            CHECK(norm_constant_reduced(BesselParams{a, 1, 2}) == -8 / (a * a * (a + 1)));
        CHECK(norm_constant_reduced(BesselParams{-20, 1, 2}) == Rational(1, 950));
        CHECK(norm_full_reduced(Partition{1}, BesselParams{-20, 0, 1}) == Rational(1, 1900));
        CHECK_THROWS_AS(norm_constant_reduced(BesselParams{-20, Rational(1, 2), 2}), std::invalid_argument);
    }
}
