// Truncation of the weight interval of a pair, with an effective finite
// generation certificate for the truncated section ring, and the step-by-step
// verification that the truncation produces a bordism with the expected
// quotients and fixed locus.
#pragma once

#include "tbw/quotients.hpp"

namespace tbw {

struct PruneSpec {
    Rat rho_minus, rho_plus;
    int h = -1, j = -1; // rho_minus in (a_h, a_{h+1}), rho_plus in (a_j, a_{j+1})
    Int d = 1;          // minimal positive integer with d*rho integral
};

struct GordanCertificate {
    std::vector<IVec> basis; // Hilbert basis of the cone over the truncated polytope
    Int generation_degree;   // minimal Veronese degree generated in degree one
    Int bound;               // degree up to which generation was verified
};

struct PrunedPair {
    Polytope polytope;                     // the truncated pair, weights in [rho_minus, rho_plus]
    std::optional<Polytope> integral_model; // d * polytope when its vertices are integral
    Polytope source_polytope;              // provenance: the pair that was truncated (normalized)
    IVec v;
    PruneSpec spec;
    GordanCertificate certificate;
    int sink_facet = -1, source_facet = -1; // facet ids of the two slice facets
};

// Truncates the (normalized) pair to the weight slab [rho_minus, rho_plus].
// Values at or outside critical values are rejected.
PrunedPair prune(const Polytope& p, const IVec& v, const Rat& rho_minus, const Rat& rho_plus);

// Plain truncation without the interval validation; used for idempotence
// checks and internal slab constructions.
Polytope truncate_pair(const Polytope& p_normalized, const IVec& v, const Rat& lo, const Rat& hi);

struct PruningStep {
    std::string name;
    bool pass;
    std::string detail;
};

struct PruningTheoremReport {
    std::vector<PruningStep> steps; // six verdicts
    bool consistency_ok;            // step-6 internal cross-check
    bool all_pass = false;
};

PruningTheoremReport verify_pruning_theorem(const Polytope& source, const IVec& v, const PrunedPair& pruned);

// Exponent cone of the monomials of weight w_i landing in the truncated
// algebra: sum (w_i - rho_minus) e_i >= 0, sum (rho_plus - w_i) e_i >= 0,
// e_i >= 0.
Cone gordan_cone(const std::vector<Int>& weights, const Rat& rho_minus, const Rat& rho_plus);

} // namespace tbw
