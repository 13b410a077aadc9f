#include <doctest.h>

#include "htype/examples.hpp"
#include "htype/json_io.hpp"

using namespace htype;

TEST_CASE("family round trip") {
    for (const auto& f : {*example_family("omega1"), build_mixed(3, 3, 4), build_positive(4, 8)}) {
        const auto back = family_from_json(Json::parse(family_to_json(f).dump()));
        CHECK(back.n == f.n);
        CHECK(back.s == f.s);
        CHECK(back.t == f.t);
        CHECK(back.members == f.members);
    }
    CHECK_THROWS(family_from_json(Json::parse(R"({"n":2,"s":1,"t":0,"members":[]})")));
}

TEST_CASE("algebra round trip") {
    for (const auto& alg : {quotient(build_free(2, {4, 0}), k4_omegas(kOmega1)), algebra_from_family(build_mixed(3, 2, 3))}) {
        const auto back = algebra_from_json(Json::parse(algebra_to_json(alg).dump()));
        CHECK(algebra_to_json(back) == algebra_to_json(alg));
        CHECK(back.omega_basis == alg.omega_basis);
        CHECK(back.j_matrices == alg.j_matrices);
        REQUIRE(back.structure_constants.size() == alg.structure_constants.size());
        for (std::size_t i = 0; i < alg.structure_constants.size(); ++i)
            CHECK(back.structure_constants[i].coeff == alg.structure_constants[i].coeff);
        CHECK(verify_h_type(back).pass());
    }
    const auto j = algebra_to_json(quotient(build_free(2, {4, 0}), k4_omegas(kOmega1)));
    CHECK(j["structure_constants"][0]["z_index"] == 1);
    CHECK(j["structure_constants"][0]["den"] == 2);
}

TEST_CASE("factorization, design and omega round trips") {
    const auto s = *example_factorization("steiner8");
    CHECK(factorization_from_json(factorization_to_json(s)) == s);
    const auto d = from_family(build_positive(3, 7), true);
    CHECK(design_from_json(design_to_json(d)) == d);
    const auto w = k4_omegas(kOmega3)[2];
    CHECK(omega_from_json(omega_to_json(w)) == w);
    CHECK_THROWS(omega_from_json(Json::parse("[[1,2,2]]")));
}
