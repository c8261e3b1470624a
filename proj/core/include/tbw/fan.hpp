// Normal fans and fan comparisons. A fan is stored canonically: primitive
// rays sorted lex, maximal cones as sorted ray-index lists, cones sorted lex.
// Two normal toric models agree iff the fans compare equal.
#pragma once

#include "tbw/polytope.hpp"

namespace tbw {

struct Fan {
    int rank = -1;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> max_cones;
    bool complete = false;
    bool operator==(const Fan&) const = default;

    std::vector<IVec> cone_rays(int c) const {
        std::vector<IVec> out;
        for (int i : max_cones[c]) out.push_back(rays[i]);
        return out;
    }
};

// Inner-normal fan, one maximal cone per vertex. Lower-dimensional polytopes
// are charted onto their affine span first (HNF basis of the direction
// lattice, lex-min vertex as base point), so the fan lives in rank dim(P).
Fan normal_fan(const Polytope& p);

// Same maximal cones as sets; requires both full-dimensional of equal rank.
bool normally_equivalent(const Polytope& a, const Polytope& b);

// Dimension-guarded comparison used when quotient models may degenerate:
// false whenever dims differ, normal-fan equality otherwise.
bool models_equivalent(const Polytope& a, const Polytope& b);

// Every maximal cone of `fine` is contained in a maximal cone of `coarse`.
// Both fans must be complete and of equal rank.
bool fan_refines(const Fan& fine, const Fan& coarse);

std::vector<IVec> ray_set(const Fan& f);

// Union test backing the completeness flag: every facet of every maximal
// cone must be shared with exactly one other maximal cone.
bool fan_wall_check(const Fan& f);

// Full-dimensional chart of a lower-dimensional polytope inside its span.
Polytope span_chart(const Polytope& p);

} // namespace tbw
