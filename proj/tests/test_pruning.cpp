#include "doctest.h"
#include "helpers.hpp"

#include "tbw/pruning.hpp"

using namespace tbwtest;

TEST_CASE("pruning the simplex gives the combinatorial cube") {
    auto pr = prune(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4"));
    CHECK(pr.polytope.vertices().size() == 8);
    Polytope expected = poly_qpts(3, {{"0", "1/4", "0"},
                                      {"0", "0", "1/4"},
                                      {"3/4", "1/4", "0"},
                                      {"3/4", "0", "1/4"},
                                      {"0", "3/4", "0"},
                                      {"0", "0", "3/4"},
                                      {"1/4", "3/4", "0"},
                                      {"1/4", "0", "3/4"}});
    CHECK(pr.polytope == expected);
    CHECK(pr.spec.h == 0);
    CHECK(pr.spec.j == 0);
    CHECK(pr.spec.d == 4);
    CHECK(pr.sink_facet >= 0);
    CHECK(pr.source_facet >= 0);
}

TEST_CASE("pruning the doubled segment") {
    auto pr = prune(segment02(), iv({1}), rat("1/2"), rat("3/2"));
    CHECK(pr.polytope == poly_qpts(1, {{"1/2"}, {"3/2"}}));
    CHECK(pr.certificate.basis == std::vector<IVec>{iv({1, 1}), iv({1, 2}), iv({3, 2})});
    CHECK(pr.certificate.generation_degree == 2);
    CHECK(pr.spec.d == 2);
    CHECK(pr.integral_model.has_value());
    CHECK(*pr.integral_model == poly_ipts(1, {{1}, {3}}));
}

TEST_CASE("pruning rejects bad levels") {
    CHECK_THROWS_AS(prune(simplex3(), iv({0, 1, 1}), rat("3/4"), rat("1/4")), precondition_error);
    // at a critical value
    CHECK_THROWS_AS(prune(simplex3(), iv({0, 1, 1}), Rat(0), rat("3/4")), precondition_error);
    CHECK_THROWS_AS(prune(unit_square(), iv({1, 1}), Rat(1), rat("7/4")), precondition_error);
}

TEST_CASE("truncation is idempotent") {
    for (const char* lo : {"1/4", "1/3"}) {
        Polytope once = truncate_pair(simplex3(), iv({0, 1, 1}), rat(lo), rat("3/4"));
        Polytope twice = truncate_pair(once, iv({0, 1, 1}), rat(lo), rat("3/4"));
        CHECK(once == twice);
    }
}

TEST_CASE("pruning theorem suite on the simplex") {
    auto pr = prune(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4"));
    auto rep = verify_pruning_theorem(simplex3(), iv({0, 1, 1}), pr);
    REQUIRE(rep.steps.size() == 6);
    for (const auto& s : rep.steps) CHECK(s.pass);
    CHECK(rep.consistency_ok);
    CHECK(rep.all_pass);
    // fixed locus: two squares, no inner components
    auto an = analyze_action(pr.polytope, iv({0, 1, 1}));
    CHECK(an.components.size() == 2);
    CHECK(an.sink_component().dim == 2);
}

TEST_CASE("pruning theorem suite on the doubled segment") {
    auto pr = prune(segment02(), iv({1}), rat("1/2"), rat("3/2"));
    auto rep = verify_pruning_theorem(segment02(), iv({1}), pr);
    CHECK(rep.all_pass);
}

TEST_CASE("pruning negative: square corner truncation fails only the bordism step") {
    auto pr = prune(unit_square(), iv({1, 1}), rat("1/4"), rat("7/4"));
    auto rep = verify_pruning_theorem(unit_square(), iv({1, 1}), pr);
    REQUIRE(rep.steps.size() == 6);
    for (int i = 0; i < 5; ++i) CHECK(rep.steps[i].pass);
    CHECK_FALSE(rep.steps[5].pass);
    CHECK(rep.consistency_ok);
    CHECK(!rep.steps[5].detail.empty()); // facet witnesses reported
}

TEST_CASE("pruning negative: simplex with the skew action fails step 6 at the expected facet") {
    auto pr = prune(simplex3(), iv({1, 1, 2}), rat("1/2"), rat("3/2"));
    auto rep = verify_pruning_theorem(simplex3(), iv({1, 1, 2}), pr);
    CHECK_FALSE(rep.steps[5].pass);
    CHECK(rep.consistency_ok);
    // the facet {x3 = 0} (= conv{0, e1, e2}) only spans weights [0, 1]
    auto src = analyze_action(simplex3(), iv({1, 1, 2}));
    int x3_facet = -1;
    for (size_t i = 0; i < src.polytope.facets().size(); ++i) {
        if (src.polytope.facets()[i].normal == iv({0, 0, 1})) x3_facet = static_cast<int>(i);
    }
    REQUIRE(x3_facet >= 0);
    CHECK(src.facet_ranges[x3_facet].lo == 0);
    CHECK(src.facet_ranges[x3_facet].hi == 1);
    CHECK(rep.steps[5].detail.find("facet " + std::to_string(x3_facet)) != std::string::npos);
}

TEST_CASE("pruned quotients match source quotients strictly inside the slab") {
    // diagonal action on the cube: critical values 0,1,2,3
    auto src = analyze_action(cube3(), iv({1, 1, 1}));
    REQUIRE(src.criticality == 3);
    auto pr = prune(cube3(), iv({1, 1, 1}), rat("1/2"), rat("5/2"));
    auto pa = analyze_action(pr.polytope, iv({1, 1, 1}));
    // source interval (1,2) survives as the middle interval of the truncation
    auto inner_src = geometric_quotient(src, 1);
    int mid = -1;
    for (int i = 0; i < pa.criticality; ++i) {
        if (pa.critical[i] + rat("1/2") == Rat(1)) mid = i;
    }
    REQUIRE(mid >= 0);
    auto inner_pr = geometric_quotient(pa, mid);
    CHECK(models_equivalent(inner_pr.polytope, inner_src.polytope));
}

TEST_CASE("same-interval pruning gives a prism-like slab") {
    auto pr = prune(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4"));
    REQUIRE(pr.spec.h == pr.spec.j);
    auto pa = analyze_action(pr.polytope, iv({0, 1, 1}));
    Polytope sink_m = project_level_set(pa.component_polytope(pa.sink), pa.split);
    Polytope source_m = project_level_set(pa.component_polytope(pa.source), pa.split);
    auto src = analyze_action(simplex3(), iv({0, 1, 1}));
    Polytope gz = geometric_quotient(src, 0).polytope;
    CHECK(normal_fan(sink_m) == normal_fan(source_m));
    CHECK(normal_fan(sink_m) == normal_fan(gz));
}

TEST_CASE("certificates validate at their stated bound") {
    for (auto [p, v] : std::vector<std::pair<Polytope, IVec>>{
             {simplex3(), iv({0, 1, 1})}, {segment02(), iv({1})}}) {
        auto pr = prune(p, v, rat("1/4"), rat("3/4"));
        auto check = semigroup_generated_check(pr.certificate.basis, pr.certificate.bound);
        CHECK(check.pass);
    }
}

TEST_CASE("gordan cones") {
    Cone c = gordan_cone({Int(0), Int(2)}, rat("1/2"), rat("3/2"));
    CHECK(c.rays == std::vector<IVec>{iv({1, 3}), iv({3, 1})});

    Cone q1 = gordan_cone({Int(0), Int(1)}, Rat(0), Rat(1));
    CHECK(q1.rays == std::vector<IVec>{iv({0, 1}), iv({1, 0})});

    Cone q2 = gordan_cone({Int(1), Int(1)}, Rat(0), Rat(2));
    CHECK(q2.rays == std::vector<IVec>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("pruned pairs round-trip through their provenance") {
    auto pr = prune(simplex3(), iv({0, 1, 1}), rat("1/4"), rat("3/4"));
    json j = to_json(pr);
    auto back = pruned_from_json(j);
    CHECK(back.polytope == pr.polytope);
    CHECK(back.certificate.basis == pr.certificate.basis);
    CHECK(back.spec.rho_minus == pr.spec.rho_minus);
}
