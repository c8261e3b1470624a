// Incremental double description for rational polyhedral cones.
//
// dd_from_halfspaces() turns {x : <a_i, x> >= 0} into extreme rays plus a
// lineality basis; dd_from_generators() runs the same machinery on the dual
// side and yields facet normals plus a basis of the equation space. Both
// outputs are canonical: rays primitive and lex-sorted, lines an HNF basis.
#pragma once

#include "tbw/linalg.hpp"

namespace tbw {

struct DDResult {
    std::vector<IVec> rays;  // extreme rays (mod lineality), primitive, lex-sorted
    std::vector<IVec> lines; // HNF basis of the lineality space
};

DDResult dd_from_halfspaces(int rank, const std::vector<IVec>& halfspaces);

// Facet description of cone(generators) + span(lines_in):
// result.rays are the facet normals (valid inequalities, extreme in the dual),
// result.lines span the equations satisfied by the whole cone.
DDResult dd_from_generators(int rank, const std::vector<IVec>& generators,
                            const std::vector<IVec>& lines_in = {});

} // namespace tbw
