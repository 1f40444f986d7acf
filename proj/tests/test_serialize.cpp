#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ihoe/serialize.hpp"

using namespace ihoe;
using namespace ihoe::testfix;

TEST_CASE("field context round-trip") {
    for (auto [p, m] : {std::pair{2, 1}, {3, 2}, {5, 2}}) {
        FieldCtx F(p, m);
        json j = to_json(F);
        FieldCtx G = field_from_json(j);
        CHECK(G.p() == p);
        CHECK(G.m() == m);
        CHECK(G.modulus() == F.modulus());
    }
    // A wrong modulus is rejected.
    json bad = to_json(FieldCtx(3, 2));
    bad["modulus_coeffs"] = std::vector<int>{2, 0, 1};
    CHECK_THROWS_AS(field_from_json(bad), Error);
}

TEST_CASE("element round-trips, randomized") {
    std::mt19937_64 rng(127);
    FieldCtx F(3, 2);
    std::uniform_int_distribution<uint64_t> dc(0, F.size() - 1);
    std::uniform_int_distribution<int> de(0, 5);
    for (int t = 0; t < 25; ++t) {
        PbwElement a;
        for (int k = 0; k < 4; ++k)
            pbw_add_term(F, a, ExpVec{de(rng), de(rng)}, F.elt(dc(rng)));
        CHECK(pbw_from_json(F, 2, to_json(F, a)) == a);

        TensorElement u = t_zero(2);
        for (int k = 0; k < 4; ++k)
            t_add_term(F, u, {ExpVec{de(rng), de(rng)}, ExpVec{de(rng), de(rng)}},
                       F.elt(dc(rng)));
        CHECK(tensor_from_json(F, 2, to_json(F, u)) == u);
    }
    // Integers are accepted as prime-subfield coefficients.
    CHECK(fq_from_json(F, json(2)) == F.from_int(2));
}

TEST_CASE("params and presentation round-trips") {
    std::mt19937_64 rng(131);
    for (auto [p, m] : {std::pair{2, 2}, {3, 1}}) {
        FieldCtx F(p, m);
        for (int t = 0; t < 10; ++t) {
            Ihoe2Params par = random_params(rng, F, 2);
            Ihoe2Params back = params_from_json(to_json(par));
            CHECK(params_equal(par, back));
        }
    }
    Ihoe2Params par = mk_params(3, 1, {{0, 1}}, {{0, 2}});
    HopfStructure HS = build_h(par);
    OrePresentation back = presentation_from_json(to_json(HS.base()));
    CHECK(back.n() == 2);
    CHECK(back.sigma_image(2, 1) == HS.base().sigma_image(2, 1));
    CHECK(back.delta_image(2, 1) == HS.base().delta_image(2, 1));
}

TEST_CASE("input documents") {
    json doc{{"format", 1},
             {"field", {{"p", 2}, {"m", 1}}},
             {"kind", "ihoe2"},
             {"params", {{"d", {{0, 1}}}, {"b", json::array()}, {"c", json::array()}}}};
    InputDoc in = input_from_json(doc);
    REQUIRE(in.ihoe2);
    CHECK(in.ihoe2->d.size() == 1);
    HopfStructure HS = build_input(in);
    CHECK(verify_hopf(HS, 4, 3, 0).all_pass);

    json bad = doc;
    bad["format"] = 99;
    CHECK_THROWS_AS(input_from_json(bad), Error);
    json bad2 = doc;
    bad2["kind"] = "nonsense";
    CHECK_THROWS_AS(input_from_json(bad2), Error);

    json kdoc{{"format", 1},
              {"field", {{"p", 3}, {"m", 1}}},
              {"kind", "kfamily"},
              {"params", {{"a", 1}, {"b", 1}, {"c", 2}}}};
    InputDoc kin = input_from_json(kdoc);
    REQUIRE(kin.kfamily);
    HopfStructure K = build_input(kin);
    CHECK(K.kind(1) == GenKind::Grouplike);
}
