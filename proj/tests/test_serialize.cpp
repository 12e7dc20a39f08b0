#include "besselpoly/serialize.hpp"

#include "doctest.h"

using namespace besselpoly;

TEST_SUITE("serialize")
{
    TEST_CASE("partitions and polynomials")
    {
        CHECK(to_json(Partition{2, 1}) == Json::array({2, 1}));
        const SymPoly f = SymPoly::monomial(2, Partition{1}, Rational(-2, 9));
        CHECK(to_json(f)["(1)"] == "-2/9");
    }

    TEST_CASE("Jack documents")
    {
        const Json j = jack_to_json(Partition{2}, 1, 2);
        for (const char* key : {"lambda", "kappa", "n", "monomial_coeffs", "hook_lower", "hook_upper",
                                "principal_specialization"})
            CHECK(j.contains(key));
        CHECK(j["kappa"] == "1");
        CHECK(j["n"] == 2);
        CHECK(j["monomial_coeffs"]["(1,1)"] == "1");
        CHECK(j["principal_specialization"] == "3");
        CHECK(jack_to_json(Partition{2}, 1, 2).dump() == j.dump());
    }

    TEST_CASE("Bessel documents")
    {
        const Json j = bessel_to_json(bessel_expand(Partition{1}, BesselParams{-20, 1, 1}));
        CHECK(j["a"] == "-20");
        CHECK(j["monomial_coeffs"]["(0)"] == "-1/10");
        CHECK(j["jack_coeffs"]["(1)"] == "1");
        CHECK(j["eigenvalue"] == "-20");
    }

    TEST_CASE("Gram and moment documents")
    {
        const BesselParams p{-20, 0, 1};
        const Json g = gram_to_json(gram_matrix(1, p), p);
        CHECK(g["scale"] == reduced_scale);
        CHECK(g["entries"][1][1] == "1/1900");
        const Json m = moments_to_json(MomentTable2(2, -20, 1));
        CHECK(m.dump() == moments_to_json(MomentTable2(2, -20, 1)).dump());
    }
}
