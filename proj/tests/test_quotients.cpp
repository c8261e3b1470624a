#include "doctest.h"
#include "helpers.hpp"

#include "tbw/quotients.hpp"

using namespace tbwtest;

namespace {

ActionAnalysis trunc_simplex() {
    Polytope t = try_slab(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4")).value();
    return analyze_action(t, iv({0, 1, 1}));
}

} // namespace

TEST_CASE("geometric quotients") {
    auto sx = analyze_action(simplex3(), iv({0, 1, 1}));
    auto q0 = geometric_quotient(sx, 0);
    CHECK(q0.polytope.dim() == 2);
    CHECK(q0.polytope.vertices().size() == 4);
    CHECK(normally_equivalent(q0.polytope, unit_square())); // the plane-product model

    auto seg = analyze_action(segment02(), iv({1}));
    CHECK(geometric_quotient(seg, 0).polytope.rank() == 0);

    auto sq = analyze_action(unit_square(), iv({1, 1}));
    auto s0 = geometric_quotient(sq, 0);
    CHECK(s0.polytope.dim() == 1);
    CHECK(s0.fan.rays.size() == 2);
    CHECK_THROWS_AS(geometric_quotient(sq, 2), input_error);
}

TEST_CASE("semigeometric quotients and wall coarsening") {
    auto sq = analyze_action(unit_square(), iv({1, 1}));
    auto w1 = semigeometric_quotient(sq, 1);
    CHECK(w1.polytope.dim() == 1);

    auto sx = analyze_action(simplex3(), iv({0, 1, 1}));
    auto s0 = semigeometric_quotient(sx, 0);
    CHECK(s0.polytope.dim() == 1); // the sink edge model

    auto seg = analyze_action(segment02(), iv({1}));
    CHECK(semigeometric_quotient(seg, 1).polytope.rank() == 0);
}

TEST_CASE("quotient chains") {
    auto sq = analyze_action(unit_square(), iv({1, 1}));
    auto chain = quotient_chain(sq);
    CHECK(chain.slices.size() == 2);
    REQUIRE(chain.walls.size() == 1);
    CHECK(chain.walls[0].tag == WallTag::isomorphism);
    CHECK(chain.walls[0].coarsening_ok);

    auto seg = analyze_action(segment02(), iv({1}));
    auto c2 = quotient_chain(seg);
    CHECK(c2.slices.size() == 1);
    CHECK(c2.walls.empty());
}

TEST_CASE("section isomorphism identities on the truncated simplex") {
    auto tr = trunc_simplex();
    auto rep = verify_section_isomorphisms(tr, 4);
    CHECK(rep.preconditions_ok);
    CHECK(rep.all_pass);
    CHECK(!rep.slab_identities.empty());
    CHECK(!rep.level_identities.empty());
}

TEST_CASE("section isomorphism identities on the prism") {
    auto pr = analyze_action(cube3(), iv({0, 0, 1}));
    auto rep = verify_section_isomorphisms(pr, 4);
    CHECK(rep.all_pass);
}

TEST_CASE("section isomorphisms reject non-bordisms") {
    auto sq = analyze_action(unit_square(), iv({1, 1}));
    CHECK_THROWS_AS(verify_section_isomorphisms(sq, 4), precondition_error);
}

TEST_CASE("extract the divisor pair from a bordism") {
    auto tr = trunc_simplex();
    auto mdp = extract_mdp(tr);
    CHECK(mdp.rays_match);
    CHECK(mdp.fans_equal); // the induced map is an isomorphism here
    CHECK(normally_equivalent(mdp.sink_model, unit_square()));
    CHECK(normally_equivalent(mdp.source_model, unit_square()));

    // trivial pair: both models are points
    Polytope seg01 = poly_ipts(1, {{0}, {1}});
    auto s = analyze_action(seg01, iv({1}));
    auto triv = extract_mdp(s);
    CHECK(triv.sink_model.rank() == 0);
    CHECK(triv.source_model.rank() == 0);

    // preconditions enforced: the doubled segment is not equalized
    auto seg = analyze_action(segment02(), iv({1}));
    CHECK_THROWS_AS(extract_mdp(seg), precondition_error);
}

TEST_CASE("chamber decomposition of the truncated simplex") {
    auto tr = trunc_simplex();
    auto rep = chamber_decomposition(tr, 5);
    CHECK(rep.all_pass);
    REQUIRE(rep.chambers.size() == 1);
    CHECK(rep.chambers[0].constant);
    CHECK(rep.chambers[0].equals_quotient);
    CHECK(rep.chambers[0].samples.size() == 5);

    Polytope seg01 = poly_ipts(1, {{0}, {1}});
    auto s = analyze_action(seg01, iv({1}));
    auto rep2 = chamber_decomposition(s, 3);
    CHECK(rep2.all_pass);
    CHECK(rep2.chambers.size() == 1);

    CHECK_THROWS_AS(chamber_decomposition(tr, 2), input_error);
}

TEST_CASE("near-wall chamber samples sit close to the walls") {
    auto tr = trunc_simplex();
    auto rep = chamber_decomposition(tr, 3);
    const auto& samples = rep.chambers[0].samples;
    // the first two samples are at 1/16 and 15/16 of the interval
    Rat len = rep.chambers[0].hi - rep.chambers[0].lo;
    Rat lo_gap = samples[0].level / (samples[0].beta + samples[0].gamma) - rep.chambers[0].lo;
    CHECK(lo_gap == len / 16);
}

TEST_CASE("extraction requires simple vertices") {
    // the pyramid itself contracts to its apex, so it is not even B-type
    auto apex_flow = analyze_action(square_pyramid(), iv({0, 0, 1}));
    CHECK_FALSE(apex_flow.b_type);
    // the prism over the pyramid is a bordism whose apex edge is not simple
    std::vector<QVec> pts;
    for (const auto& w : square_pyramid().vertices()) {
        for (int t = 0; t <= 1; ++t) {
            QVec q = w;
            q.push_back(Rat(t));
            pts.push_back(q);
        }
    }
    Polytope prism = Polytope::from_points(4, pts);
    auto an = analyze_action(prism, iv({0, 0, 0, 1}));
    CHECK(an.bordism);
    CHECK_FALSE(an.q_factorial);
    CHECK_THROWS_AS(extract_mdp(an), precondition_error);
    CHECK_THROWS_AS(verify_section_isomorphisms(an, 4), precondition_error);
}
