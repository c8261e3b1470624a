#include "doctest.h"
#include "helpers.hpp"

#include "tbw/action.hpp"

using namespace tbwtest;

TEST_CASE("analyze_action on the simplex") {
    auto an = analyze_action(simplex3(), iv({0, 1, 1}));
    CHECK(an.criticality == 1);
    CHECK(an.bandwidth == 1);
    CHECK(an.components.size() == 2);
    CHECK(an.sink_component().dim == 1);   // edge conv{0, e1}
    CHECK(an.source_component().dim == 1); // edge conv{e2, e3}
    CHECK(an.critical == std::vector<Rat>{Rat(0), Rat(1)});
}

TEST_CASE("analyze_action on the square with the diagonal action") {
    auto an = analyze_action(unit_square(), iv({1, 1}));
    CHECK(an.criticality == 2);
    CHECK(an.bandwidth == 2);
    CHECK(an.components.size() == 4); // four isolated vertices
    int inner = 0;
    for (const auto& c : an.components) {
        CHECK(c.dim == 0);
        if (c.kind == ComponentKind::inner) {
            ++inner;
            CHECK(c.weight == 1);
        }
    }
    CHECK(inner == 2);
}

TEST_CASE("analyze_action on the segment") {
    auto an = analyze_action(segment02(), iv({1}));
    CHECK(an.criticality == 1);
    CHECK(an.bandwidth == 2);
    CHECK(an.components.size() == 2);
}

TEST_CASE("trivial or imprimitive actions are rejected") {
    CHECK_THROWS_AS(analyze_action(unit_square(), iv({0, 0})), precondition_error);
    Polytope seg = poly_ipts(1, {{0}, {4}});
    CHECK_THROWS_AS(analyze_action(seg, iv({2})), precondition_error);
}

TEST_CASE("normalization translates the minimal weight to zero") {
    Polytope shifted = simplex3().translate(qv({"0", "3", "-1"}));
    auto an = analyze_action(shifted, iv({0, 1, 1}));
    CHECK(min_pairing(an.polytope, an.v) == 0);
    CHECK(an.critical.front() == 0);
    CHECK(an.bandwidth == 1);
}

TEST_CASE("equalized at the extremes") {
    auto s = analyze_action(simplex3(), iv({0, 1, 1}));
    CHECK(is_equalized_at_extremes(s) == std::pair<bool, bool>{true, true});

    auto seg = analyze_action(segment02(), iv({1}));
    CHECK(is_equalized_at_extremes(seg) == std::pair<bool, bool>{false, false});
    REQUIRE(!seg.equalized_witnesses.empty());
    CHECK(seg.equalized_witnesses.front().increment == 2);
    CHECK(seg.equalized_witnesses.front().primitive_step == 1);

    auto sq = analyze_action(unit_square(), iv({1, 1}));
    CHECK(is_equalized_at_extremes(sq) == std::pair<bool, bool>{true, true});
}

TEST_CASE("b-type") {
    auto sq = analyze_action(unit_square(), iv({1, 1}));
    CHECK_FALSE(is_b_type(sq)); // slice near 0 is a segment, sink is a point

    auto seg = analyze_action(segment02(), iv({1}));
    CHECK(is_b_type(seg)); // slice and sink are both points

    auto sx = analyze_action(simplex3(), iv({0, 1, 1}));
    CHECK_FALSE(is_b_type(sx)); // sink is an edge, quotient a square

    Polytope trunc = try_slab(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4")).value();
    auto tr = analyze_action(trunc, iv({0, 1, 1}));
    CHECK(is_b_type(tr));
    CHECK(is_equalized_at_extremes(tr) == std::pair<bool, bool>{true, true});
}

TEST_CASE("admissibility per interval") {
    auto sq = analyze_action(unit_square(), iv({1, 1}));
    CHECK(admissible_quotients(sq) == std::vector<bool>{false, false});
    CHECK_FALSE(sq.offending_facets[0].empty());

    auto sx = analyze_action(simplex3(), iv({0, 1, 1}));
    CHECK(admissible_quotients(sx) == std::vector<bool>{true});

    Polytope trunc = try_slab(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4")).value();
    auto tr = analyze_action(trunc, iv({0, 1, 1}));
    CHECK(admissible_quotients(tr) == std::vector<bool>{true});
}

TEST_CASE("admissibility has prefix/suffix structure") {
    std::vector<std::pair<Polytope, IVec>> pairs = {
        {unit_square(), iv({1, 1})},
        {simplex3(), iv({0, 1, 1})},
        {simplex3(), iv({1, 1, 2})},
        {cube3(), iv({0, 0, 1})},
        {cube3(), iv({1, 1, 1})},
        {square_pyramid(), iv({0, 0, 1})},
    };
    for (const auto& [p, v] : pairs) {
        auto an = analyze_action(p, v);
        auto adm = an.admissible;
        // the true entries must form one contiguous block
        int first_true = -1, last_true = -1;
        for (size_t i = 0; i < adm.size(); ++i) {
            if (adm[i]) {
                if (first_true < 0) first_true = static_cast<int>(i);
                last_true = static_cast<int>(i);
            }
        }
        if (first_true >= 0) {
            for (int i = first_true; i <= last_true; ++i) CHECK(adm[i]);
        }
    }
}

TEST_CASE("bordism equivalence of the two code paths") {
    std::vector<std::pair<Polytope, IVec>> pairs = {
        {unit_square(), iv({1, 1})},
        {simplex3(), iv({0, 1, 1})},
        {simplex3(), iv({1, 1, 2})},
        {cube3(), iv({0, 0, 1})},
        {segment02(), iv({1})},
    };
    for (const auto& [p, v] : pairs) {
        auto an = analyze_action(p, v);
        CHECK(an.bordism == an.bordism_flow); // also asserted inside analyze_action
    }
    Polytope trunc = try_slab(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4")).value();
    CHECK(is_bordism(analyze_action(trunc, iv({0, 1, 1}))));
    CHECK_FALSE(is_bordism(analyze_action(unit_square(), iv({1, 1}))));
    CHECK_FALSE(is_bordism(analyze_action(simplex3(), iv({0, 1, 1}))));
    CHECK(is_bordism(analyze_action(cube3(), iv({0, 0, 1}))));
}

TEST_CASE("invariant divisors: every facet is fixed-extremal or extends") {
    Polytope trunc = try_slab(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4")).value();
    auto an = analyze_action(trunc, iv({0, 1, 1}));
    REQUIRE(an.bordism);
    for (int i = 0; i < an.criticality; ++i) {
        Polytope model = quotient_model(an, i);
        std::vector<int> image;
        for (int f = 0; f < static_cast<int>(model.facets().size()); ++f) {
            image.push_back(extend_divisor(an, i, f));
        }
        std::sort(image.begin(), image.end());
        CHECK(std::adjacent_find(image.begin(), image.end()) == image.end()); // injective
        // image + extremal fixed facets account for all facets
        std::vector<int> fixed;
        for (size_t f = 0; f < an.facet_ranges.size(); ++f) {
            const auto& r = an.facet_ranges[f];
            if (r.v_constant && (r.lo == an.critical.front() || r.lo == an.critical.back())) {
                fixed.push_back(static_cast<int>(f));
            }
        }
        CHECK(image.size() + fixed.size() == an.polytope.facets().size());
    }
    CHECK_THROWS_AS(extend_divisor(an, 7, 0), input_error);
}

TEST_CASE("inner equalized diagnostic") {
    auto an = analyze_action(unit_square(), iv({1, 1}));
    CHECK(an.equalized_inner);
    // stretched square: the inner vertices connect by an edge of pairing 2
    Polytope stretched = poly_ipts(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}});
    auto an2 = analyze_action(stretched, iv({1, 1}));
    bool some_bad_edge = !an2.inner_witnesses.empty() || !an2.equalized_witnesses.empty();
    CHECK(some_bad_edge);
}
