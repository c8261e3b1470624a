// Rational polyhedral cones, Hilbert bases, and effective generation
// degrees for cones over polytopes.
#pragma once

#include "tbw/polytope.hpp"

namespace tbw {

struct Cone {
    int rank = -1;
    std::vector<IVec> rays;       // extreme rays mod lineality, primitive, sorted
    std::vector<IVec> lines;      // HNF basis of the lineality space
    std::vector<IVec> halfspaces; // valid inequalities <h, x> >= 0, extreme in the dual
    std::vector<IVec> equations;  // HNF basis of the span equations
    bool pointed = false;

    static Cone from_generators(int rank, const std::vector<IVec>& gens);
    static Cone from_halfspaces(int rank, const std::vector<IVec>& halfspaces);

    bool contains(const IVec& x) const;
    bool contains(const QVec& x) const;
};

// Cone over P placed at height 1: rays through (v, 1) for vertices v.
Cone cone_over(const Polytope& p);

// Minimal generating set of C ∩ Z^n for a pointed cone C. Degree-by-degree
// saturation; the termination bound is the sum of generator degrees under a
// grading strictly positive on the cone.
std::vector<IVec> hilbert_basis(const Cone& c);

struct GenerationResult {
    Int dprime;                        // minimal Veronese degree generated in degree one
    std::vector<IVec> degree_one_generators; // lattice points of d'P, lifted to height 1
    std::vector<IVec> basis;           // Hilbert basis of the cone over d'P
};

// Minimal d such that the semigroup of the cone over dP is generated by its
// height-one elements; equivalently the Hilbert basis of that cone sits
// entirely at height one.
GenerationResult generation_degree(const Polytope& p);

} // namespace tbw
