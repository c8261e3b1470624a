#include "doctest.h"
#include "helpers.hpp"

#include "tbw/realize.hpp"

using namespace tbwtest;

TEST_CASE("validate divisor pairs") {
    auto idv = validate_mdp(identity_input());
    CHECK(idv.valid);
    CHECK(idv.rays_match);
    REQUIRE(idv.certificate.has_value());
    CHECK(idv.certificate->generation_degree == 1);

    auto flv = validate_mdp(flop_input());
    CHECK(flv.valid);
    CHECK(flv.rays_match);
    REQUIRE(flv.p_plus.has_value());
    // the two fans share rays but are different fans
    CHECK_FALSE(normal_fan(flop_input().p_minus) == normal_fan(*flv.p_plus));

    // collapsing the second polytope to a point is rejected
    MdpInput bad;
    bad.p_minus = simplex2();
    bad.plus_coeffs = {{iv({1, 0}), Int(0)}, {iv({0, 1}), Int(0)}, {iv({-1, -1}), Int(0)}};
    auto badv = validate_mdp(bad);
    CHECK_FALSE(badv.valid);
    CHECK_FALSE(badv.rays_match);
}

TEST_CASE("the identity realization is the product slab") {
    auto rb = realize(identity_input(), 1, 1);
    CHECK(rb.q.rank() == 3);
    CHECK(rb.q.vertices().size() == 6); // triangle times segment
    CHECK(rb.hull_equals_slab);
    auto an = analyze_action(rb.q, rb.v);
    CHECK(an.criticality == 1);
    auto rep = verify_realization(rb);
    CHECK(rep.all_pass);
    CHECK(rep.chain.slices.size() == 1);
}

TEST_CASE("asymmetric gradings tilt the slab") {
    MdpInput seg;
    seg.p_minus = poly_ipts(1, {{0}, {1}});
    seg.plus_coeffs = {{iv({1}), Int(0)}, {iv({-1}), Int(1)}};
    auto rb = realize(seg, 1, 2);
    // bottom slice is alpha_plus * P_- = [0,2], top is alpha_minus * P_+ = [0,1]
    Polytope expected = poly_ipts(2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}});
    CHECK(rb.q == expected);
    CHECK(verify_realization(rb).all_pass);

    auto rb2 = realize(seg, 2, 1);
    Polytope expected2 = poly_ipts(2, {{0, 0}, {1, 0}, {0, 1}, {2, 1}});
    CHECK(rb2.q == expected2);
    CHECK(verify_realization(rb2).all_pass);

    CHECK_THROWS_AS(realize(seg, 2, 2), precondition_error);
    CHECK_THROWS_AS(realize(seg, 0, 1), precondition_error);
}

TEST_CASE("the flop realization has one small-modification wall") {
    auto rb = realize(flop_input(), 1, 1);
    CHECK(rb.q.rank() == 4);
    CHECK_FALSE(rb.hull_equals_slab); // the inner vertex is not spanned by the ends
    auto an = analyze_action(rb.q, rb.v);
    CHECK(an.criticality == 2);
    CHECK(an.critical == std::vector<Rat>{Rat(0), rat("1/2"), Rat(1)});
    CHECK(an.bordism);
    CHECK(an.equalized_sink);
    CHECK(an.equalized_source);
    CHECK(an.q_factorial);

    auto rep = verify_realization(rb);
    CHECK(rep.all_pass);
    REQUIRE(rep.chain.walls.size() == 1);
    CHECK(rep.chain.walls[0].tag == WallTag::small_modification);
    CHECK(rep.chain.walls[0].coarsening_ok);
    CHECK(ray_set(rep.chain.slices[0].fan) == ray_set(rep.chain.slices[1].fan));
    CHECK_FALSE(rep.chain.slices[0].fan == rep.chain.slices[1].fan);
}

TEST_CASE("a corrupted slab fails the bordism verdict with witnesses") {
    auto rb = realize(flop_input(), 1, 1);
    // drop the lower height bound: the slab grows past the sink
    std::vector<Halfspace> hs;
    for (const auto& f : rb.q.facets()) {
        if (f.normal == iv({0, 0, 0, 1}) && f.offset == 0) continue;
        hs.push_back(f);
    }
    RealizedBordism corrupted = rb;
    corrupted.q = Polytope::from_halfspaces(4, hs);
    REQUIRE(corrupted.q.vertices().size() != rb.q.vertices().size());
    auto rep = verify_realization(corrupted);
    CHECK_FALSE(rep.all_pass);
    bool bordism_failed = false;
    std::string detail;
    for (const auto& v : rep.verdicts) {
        if (v.name == "bordism" && !v.pass) {
            bordism_failed = true;
            detail = v.detail;
        }
    }
    CHECK(bordism_failed);
    CHECK(!detail.empty());
}

TEST_CASE("round trip: extraction recovers the input pair") {
    for (const MdpInput& input : {identity_input(), flop_input()}) {
        auto val = validate_mdp(input);
        REQUIRE(val.valid);
        for (auto [am, ap] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 1}}) {
            auto rb = realize(input, am, ap);
            auto an = analyze_action(rb.q, rb.v);
            auto mdp = extract_mdp(an);
            CHECK(normally_equivalent(mdp.sink_model, input.p_minus));
            CHECK(normally_equivalent(mdp.source_model, *val.p_plus));
        }
    }
}

TEST_CASE("realizations with different gradings have matching chains") {
    auto rep = compare_realizations(flop_input(), 1, 1, 1, 2);
    CHECK(rep.lengths_match);
    CHECK(rep.all_pass);

    auto rep2 = compare_realizations(identity_input(), 1, 1, 2, 1);
    CHECK(rep2.all_pass);
}

TEST_CASE("asymmetric gradings on the flop keep every verdict green") {
    for (auto [am, ap] : std::vector<std::pair<long, long>>{{1, 2}, {2, 1}}) {
        auto rb = realize(flop_input(), am, ap);
        auto rep = verify_realization(rb);
        CHECK(rep.all_pass);
        CHECK(rep.chain.walls.size() == 1);
        CHECK(rep.chain.walls[0].tag == WallTag::small_modification);
    }
}

TEST_CASE("every slab facet is extremal-fixed or extends a quotient divisor") {
    auto rb = realize(flop_input(), 1, 1);
    auto an = analyze_action(rb.q, rb.v);
    REQUIRE(an.bordism);
    for (int i = 0; i < an.criticality; ++i) {
        Polytope model = quotient_model(an, i);
        std::vector<int> image;
        for (int fct = 0; fct < static_cast<int>(model.facets().size()); ++fct) {
            image.push_back(extend_divisor(an, i, fct));
        }
        std::sort(image.begin(), image.end());
        CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
        size_t fixed = 0;
        for (const auto& r : an.facet_ranges) {
            if (r.v_constant && (r.lo == an.critical.front() || r.lo == an.critical.back())) ++fixed;
        }
        CHECK(image.size() + fixed == an.polytope.facets().size());
    }
}
