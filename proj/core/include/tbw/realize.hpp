// Geometric realization of a small modification given by a divisor pair:
// validation of the input pair, construction of the slab whose action
// realizes the induced map, and the verification/comparison reports.
#pragma once

#include "tbw/pruning.hpp"

namespace tbw {

struct MdpInput {
    Polytope p_minus;                            // ample model: full-dimensional lattice polytope
    std::vector<std::pair<IVec, Int>> plus_coeffs; // ray of the normal fan -> coefficient
};

struct MdpValidation {
    bool valid = false;
    std::vector<std::string> reasons;
    bool rays_match = false;
    std::optional<Polytope> p_plus;
    std::optional<GordanCertificate> certificate; // finite generation of the two-parameter ring
};

// with_certificate also computes the finite-generation certificate of the
// two-parameter section ring on the slab cone (the expensive part); the
// structural checks alone are enough for realize/verify.
MdpValidation validate_mdp(const MdpInput& input, bool with_certificate = true);

// The realized pair: a slab in rank n+1 acted on by the last coordinate.
// Coordinates are the Cayley ones: the slab has height extent 1, its bottom
// slice is alpha_plus * P_-, its top slice alpha_minus * P_+; the recorded
// scaling relates it to the normalized slab whose end slices are
// (1/alpha_minus) P_- and (1/alpha_plus) P_+.
struct RealizedBordism {
    Polytope q;
    IVec v; // last-coordinate covector
    MdpInput input;
    Int alpha_minus = 1, alpha_plus = 1;
    bool hull_equals_slab = false; // whether end-slice sections already span the slab
};

RealizedBordism realize(const MdpInput& input, const Int& alpha_minus, const Int& alpha_plus);

struct RealizationVerdict {
    std::string name;
    bool pass;
    std::string detail;
};

struct RealizationReport {
    std::vector<RealizationVerdict> verdicts;
    QuotientChain chain;
    bool all_pass = false;
};

// Checks sink/source identification, bordism, equalization at the extremes,
// the end models against the input pair, and the graded count consistency of
// the slab against divisor polytopes (degrees <= veronese_degree).
RealizationReport verify_realization(const RealizedBordism& rb, const Int& veronese_degree = 4);

struct CompareReport {
    bool lengths_match = false;
    std::vector<bool> models_match; // per interval
    std::vector<bool> tags_match;   // per wall
    bool all_pass = false;
};

// The quotient chains of two realizations of the same input agree model by
// model after reindexing levels.
CompareReport compare_realizations(const MdpInput& input, const Int& am1, const Int& ap1,
                                   const Int& am2, const Int& ap2);

} // namespace tbw
