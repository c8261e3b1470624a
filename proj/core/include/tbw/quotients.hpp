// Quotient chains, wall crossings, section-count identities, extraction of
// the sink/source divisor pair from a bordism, and the chamber decomposition
// of the segment it spans.
#pragma once

#include "tbw/action.hpp"
#include "tbw/oracle.hpp"

namespace tbw {

struct QuotientSlice {
    int index;    // interval index, or wall index for semigeometric slices
    Rat level;    // slicing level
    Polytope polytope; // in the quotient lattice
    Fan fan;
};

enum class WallTag { isomorphism, small_modification, divisorial_drop };

struct Wall {
    int index; // 1..r-1
    QuotientSlice semigeometric;
    WallTag tag;
    bool coarsening_ok; // both adjacent quotient fans refine the wall fan
};

struct QuotientChain {
    std::vector<QuotientSlice> slices; // length r
    std::vector<Wall> walls;           // length r-1
};

QuotientSlice geometric_quotient(const ActionAnalysis& a, int i);
QuotientSlice semigeometric_quotient(const ActionAnalysis& a, int i);
QuotientChain quotient_chain(const ActionAnalysis& a);

struct CountIdentity {
    Int m;
    Int lo, hi;   // slab bounds, or lo == hi == c for level identities
    Int expected; // oracle side
    Int got;      // engine side
    bool pass;
};

struct SectionIsoReport {
    bool preconditions_ok = false;
    std::string failing_predicate;
    std::vector<CountIdentity> slab_identities;  // graded sums vs slab polytopes
    std::vector<CountIdentity> level_identities; // per-level counts vs projected slices
    bool all_pass = false;
};

// Exact count identities between the graded enumeration and the slab /
// projected-slice polytopes, for all m <= m_max and all integral bounds.
// Requires a Q-factorial bordism equalized at the extremes.
SectionIsoReport verify_section_isomorphisms(const ActionAnalysis& a, const Int& m_max);

struct ExtractedMdp {
    Polytope sink_model;   // projected sink facet: the ample side
    Polytope source_model; // projected level-bandwidth slice: the other end
    Fan sink_fan, source_fan;
    bool rays_match = false;
    bool fans_equal = false; // when true the induced map is an isomorphism
    Rat bandwidth;
    std::vector<std::pair<Rat, Polytope>> level_models; // integral levels + walls
};

// Requires a Q-factorial bordism equalized at the extremes; errors when the
// end models fail the shared-ray condition.
ExtractedMdp extract_mdp(const ActionAnalysis& a);

struct ChamberSample {
    Rat beta, gamma; // positive, beta + gamma integral
    Rat level;       // beta*a_i + gamma*a_{i+1}, rescaled into the polytope
    bool matches_quotient;
};

struct ChamberVerdict {
    int index;
    Rat lo, hi; // [a_i, a_{i+1}]
    std::vector<ChamberSample> samples;
    bool constant;          // all samples give one model
    bool equals_quotient;   // and it is the interval's geometric quotient
};

struct ChamberReport {
    std::vector<ChamberVerdict> chambers;
    std::vector<bool> wall_separates; // per wall: adjacent chamber models differ
    std::vector<WallTag> wall_tags;
    bool all_pass = false;
};

ChamberReport chamber_decomposition(const ActionAnalysis& a, int samples_per_chamber = 3);

} // namespace tbw
