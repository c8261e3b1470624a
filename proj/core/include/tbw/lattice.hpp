// Lattice splits: unimodular coordinates in which a chosen primitive
// covector becomes the last coordinate. Level sets of the covector then
// project to the first n-1 coordinates, which identifies the quotient
// lattice shared by all levels.
#pragma once

#include "tbw/polytope.hpp"

namespace tbw {

struct LatticeSplit {
    IVec v;          // primitive direction
    IMat to_split;   // unimodular, last row == v
    IMat from_split; // inverse of to_split
    int rank() const { return static_cast<int>(v.size()); }

    // section point with <s, v> == 1
    IVec section() const {
        IVec s(rank());
        for (int i = 0; i < rank(); ++i) s[i] = from_split[i][rank() - 1];
        return s;
    }
};

// Deterministic normal-form construction; errors when v is zero or imprimitive.
LatticeSplit lattice_split(const IVec& v);

// Image of a single-level polytope in the quotient lattice (rank n-1).
// Errors when Q is not contained in one v-level.
Polytope project_level_set(const Polytope& q, const LatticeSplit& split);

} // namespace tbw
