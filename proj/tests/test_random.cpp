// Property tests over seeded random inputs: the canonicalization pipeline,
// the two lattice-point enumerators, fan completeness, and the action
// classifier have to agree with each other on unstructured data.
#include "doctest.h"
#include "helpers.hpp"

#include "tbw/action.hpp"
#include "tbw/oracle.hpp"
#include "tbw/pruning.hpp"

using namespace tbwtest;

namespace {

struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

Polytope random_cloud(Rng& rng, int rank, int count) {
    std::vector<QVec> pts;
    for (int i = 0; i < count; ++i) {
        QVec p(rank);
        for (int j = 0; j < rank; ++j) p[j] = Rat(rng.range(-4, 4));
        pts.push_back(p);
    }
    return Polytope::from_points(rank, pts);
}

} // namespace

TEST_CASE("random hulls: representations agree and enumerators coincide") {
    Rng rng(0x5eed1);
    for (int trial = 0; trial < 40; ++trial) {
        int rank = 2 + static_cast<int>(rng.next() % 3);
        int count = 4 + static_cast<int>(rng.next() % 7);
        Polytope p = random_cloud(rng, rank, count);

        // every vertex satisfies the facet description with equality somewhere
        for (const auto& v : p.vertices()) CHECK(p.contains(v));

        // dual description round-trip
        Polytope again = Polytope::from_halfspaces(p.rank(), p.facets(), p.span_equations());
        CHECK(again == p);

        // the two enumerators agree
        CHECK(lattice_points(p) == box_lattice_points(p));

        // Euler relation on the face lattice (empty face excluded)
        auto f = f_vector(p);
        Int euler = 0;
        for (size_t i = 0; i < f.size(); ++i) euler += (i % 2 == 0 ? f[i] : -f[i]);
        CHECK(euler == 1);

        if (p.full_dimensional()) {
            Fan fan = normal_fan(p);
            CHECK(fan_wall_check(fan));
        }
    }
}

TEST_CASE("random slices project compatibly with the lattice") {
    Rng rng(0xabc123);
    for (int trial = 0; trial < 25; ++trial) {
        int rank = 2 + static_cast<int>(rng.next() % 2);
        Polytope p = random_cloud(rng, rank, 6);
        if (!p.full_dimensional()) continue;
        IVec v(rank);
        for (int j = 0; j < rank; ++j) v[j] = Int(rng.range(-2, 2));
        if (is_zero(v)) v[0] = 1;
        v = primitive(v);
        Rat lo = min_pairing(p, v), hi = max_pairing(p, v);
        if (lo == hi) continue;
        LatticeSplit split = lattice_split(v);
        for (int num = 1; num <= 3; ++num) {
            Rat tau = lo + (hi - lo) * Rat(num, 4);
            Polytope proj = project_level_set(slice(p, v, tau), split);
            // lattice points of dilated level sets biject with the projection
            for (long m = 1; m <= 4; ++m) {
                if (!is_integral(tau * Rat(m))) continue;
                Int level = rat_num(tau * Rat(m));
                size_t direct = 0;
                for (const auto& u : lattice_points(p.dilate(Rat(m)))) {
                    if (dot(u, v) == level) ++direct;
                }
                CHECK(lattice_points(proj.dilate(Rat(m))).size() == direct);
            }
        }
    }
}

TEST_CASE("random actions classify consistently") {
    Rng rng(0x7777);
    int analyzed_count = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int rank = 2 + static_cast<int>(rng.next() % 2);
        Polytope p = random_cloud(rng, rank, 6);
        if (!p.full_dimensional()) continue;
        IVec v(rank);
        for (int j = 0; j < rank; ++j) v[j] = Int(rng.range(-2, 2));
        if (is_zero(v)) v[0] = 1;
        v = primitive(v);
        // analyze_action cross-checks the two bordism paths internally
        auto an = analyze_action(p, v);
        ++analyzed_count;
        CHECK(an.critical.front() == 0);
        CHECK(an.bandwidth == an.critical.back());
        // prefix/suffix structure of the non-admissible intervals
        int first_true = -1, last_true = -1;
        for (size_t i = 0; i < an.admissible.size(); ++i) {
            if (an.admissible[i]) {
                if (first_true < 0) first_true = static_cast<int>(i);
                last_true = static_cast<int>(i);
            }
        }
        for (int i = std::max(0, first_true); i <= last_true; ++i) CHECK(an.admissible[i]);
        // truncation of the middle part is idempotent
        if (an.criticality >= 1) {
            Rat lo = an.bandwidth / 8, hi = an.bandwidth - an.bandwidth / 8;
            bool at_critical = false;
            for (const auto& c : an.critical) at_critical = at_critical || c == lo || c == hi;
            if (!at_critical && lo < hi) {
                Polytope once = truncate_pair(an.polytope, v, lo, hi);
                CHECK(truncate_pair(once, v, lo, hi) == once);
            }
        }
    }
    CHECK(analyzed_count > 20);
}
