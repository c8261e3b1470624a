// Brute-force counterparts of the graded-ring computations. Everything here
// enumerates lattice points directly (bounding box plus facet rejection) and
// multiplies semigroup elements explicitly, so it stays independent of the
// Fourier-Motzkin enumeration and the slicing machinery it cross-checks.
#pragma once

#include "tbw/cone.hpp"
#include "tbw/lattice.hpp"

#include <map>

namespace tbw {

// Independent enumerator: bounding box sweep with facet filtering.
std::vector<IVec> box_lattice_points(const Polytope& p);

struct GradedCountTable {
    Int m_max;
    // (dilation m, level k) -> number of lattice points of mP at <u,v> = k
    std::map<std::pair<Int, Int>, Int> counts;

    Int count(const Int& m, const Int& k) const {
        auto it = counts.find({m, k});
        return it == counts.end() ? Int(0) : it->second;
    }
    Int total(const Int& m) const {
        Int t = 0;
        for (const auto& [key, c] : counts) {
            if (key.first == m) t += c;
        }
        return t;
    }
};

GradedCountTable graded_section_counts(const Polytope& p, const IVec& v, const Int& m_max);

struct GenerationCheck {
    bool pass = false;
    IVec missing; // first missing element when !pass
};

// Confirms that every lattice point of cone(generators) with last coordinate
// <= target_degree is a nonnegative integer sum of the generators. Graded
// slices that are unbounded get clipped to a box derived from the generators
// and the target degree; the check is exact whenever all slices are bounded.
GenerationCheck semigroup_generated_check(const std::vector<IVec>& generators, const Int& target_degree);

struct WeightModel {
    Polytope model; // projected to the quotient lattice
    bool stabilized = false;
};

// Hull of (1/m) * {u in mP : <u,v> = m*tau} accumulated over m <= m_max,
// projected along the split; errors if no m <= m_max makes m*tau integral.
WeightModel weight_subalgebra_model(const Polytope& p, const IVec& v, const Rat& tau, const Int& m_max);

} // namespace tbw
