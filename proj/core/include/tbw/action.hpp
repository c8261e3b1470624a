// Fixed-point combinatorics and classification predicates of a one-parameter
// subgroup acting on a polarized toric pair.
//
// Dictionary used throughout: fixed components are the maximal faces on
// which the covector v is constant; their common value is the linearization
// weight; the flow of a facet divisor connects the fixed components at its
// v-minimal and v-maximal faces.
#pragma once

#include "tbw/fan.hpp"
#include "tbw/lattice.hpp"

namespace tbw {

enum class ComponentKind { sink, source, inner };

struct FixedComponent {
    std::vector<int> vertex_ids; // indices into the analysis polytope's vertex list
    Rat weight;
    int dim;
    ComponentKind kind;
};

// An edge leaving an extremal component that breaks the unit-step rule:
// either its primitive direction pairs with v above 1 (nontrivial isotropy
// on the invariant curve) or the edge crosses more than one weight unit.
struct EdgeWitness {
    QVec from, to;      // from lies in the extremal component
    Rat increment;      // <to - from, v>
    Int primitive_step; // pairing of the primitive edge direction with v
};

struct FacetRange {
    Rat lo, hi;
    bool v_constant;
};

struct ActionAnalysis {
    Polytope polytope; // translated so the minimal weight is 0
    IVec v;
    QVec shift; // translation that was applied to the input polytope

    std::vector<FixedComponent> components; // sorted by (weight, vertex ids)
    std::vector<Rat> critical;              // critical[0] == 0
    Rat bandwidth;
    int criticality = 0;
    int sink = -1, source = -1; // component indices

    std::vector<FacetRange> facet_ranges; // parallel to polytope.facets()

    bool equalized_sink = false, equalized_source = false;
    std::vector<EdgeWitness> equalized_witnesses;
    bool equalized_inner = false; // diagnostic over inner components
    std::vector<EdgeWitness> inner_witnesses;

    bool b_type = false;
    bool b_type_sink_ok = false, b_type_source_ok = false;

    std::vector<bool> admissible;                   // per interval [a_i, a_{i+1}]
    std::vector<std::vector<int>> offending_facets; // facet ids per interval

    bool bordism = false;      // b_type && all intervals admissible
    bool bordism_flow = false; // independent path via facet flow endpoints
    std::vector<int> flow_offenders;

    bool q_factorial = false;
    std::vector<int> nonsimple_vertices;

    LatticeSplit split;

    const FixedComponent& sink_component() const { return components[sink]; }
    const FixedComponent& source_component() const { return components[source]; }
    Polytope component_polytope(int id) const;
    Rat interval_mid(int i) const { return (critical[i] + critical[i + 1]) / 2; }
};

// Errors with precondition_error when v is imprimitive, zero, or constant on P.
ActionAnalysis analyze_action(const Polytope& p, const IVec& v);

// Per-predicate wrappers.
std::pair<bool, bool> is_equalized_at_extremes(const ActionAnalysis& a);
bool is_b_type(const ActionAnalysis& a);
std::vector<bool> admissible_quotients(const ActionAnalysis& a);
bool is_bordism(const ActionAnalysis& a);
bool is_q_factorial(const Polytope& p, std::vector<int>* nonsimple = nullptr);

// The unique non-fixed facet of P whose level slice produces the given facet
// of the i-th quotient model; errors when no facet matches.
int extend_divisor(const ActionAnalysis& a, int interval, int quotient_facet);

// Quotient model facet count for the interval (used to drive extend_divisor).
Polytope quotient_model(const ActionAnalysis& a, int interval);
Polytope quotient_model_at(const ActionAnalysis& a, const Rat& level);

} // namespace tbw
