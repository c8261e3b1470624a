#include "doctest.h"
#include "helpers.hpp"

using namespace tbwtest;

TEST_CASE("polytope JSON round-trips") {
    json j = to_json(simplex3());
    Polytope back = polytope_from_json(j);
    CHECK(back == simplex3());

    // halfspace form with rational offsets as p/q strings
    json h = json::parse(R"({"rank": 1, "halfspaces": [
        {"normal": [1], "offset": "-1/2"},
        {"normal": [-1], "offset": "3/2"}]})");
    Polytope seg = polytope_from_json(h);
    CHECK(seg == poly_qpts(1, {{"1/2"}, {"3/2"}}));

    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"rank": 2})")), input_error);
    CHECK_THROWS_AS(polytope_from_json(json::parse(R"({"rank": 1, "vertices": [["x"]]})")), input_error);
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-2") == Rat(-2));
    CHECK(rat_to_string(Rat(7, 2)) == "7/2");
    CHECK(rat_to_string(Rat(6, 2)) == "3");
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("a/b"), input_error);
}

TEST_CASE("divisor pair JSON round-trips") {
    json j = to_json(flop_input());
    MdpInput back = mdp_from_json(j);
    CHECK(back.p_minus == flop_input().p_minus);
    CHECK(back.plus_coeffs == flop_input().plus_coeffs);
}

TEST_CASE("analysis reports serialize deterministically") {
    auto an = analyze_action(simplex3(), iv({0, 1, 1}));
    std::string once = to_json(an).dump(2);
    std::string twice = to_json(analyze_action(simplex3(), iv({0, 1, 1}))).dump(2);
    CHECK(once == twice);
    json j = to_json(an);
    CHECK(j["criticality"] == 1);
    CHECK(j["predicates"]["bordism"] == false);
    CHECK(j["fixed_components"].size() == 2);
}

TEST_CASE("chain text rendering") {
    auto an = analyze_action(unit_square(), iv({1, 1}));
    std::string text = render_chain_text(quotient_chain(an));
    CHECK(text.find("GX(0,1)") != std::string::npos);
    CHECK(text.find("isomorphism") != std::string::npos);
}

TEST_CASE("graded count tables serialize") {
    auto t = graded_section_counts(segment02(), iv({1}), 2);
    json j = to_json(t);
    CHECK(j["m_max"] == 2);
    CHECK(j["counts"].size() == 8); // levels 0..2 at m=1, 0..4 at m=2
}
