#include "tbw/action.hpp"

#include <algorithm>

namespace tbw {

Polytope ActionAnalysis::component_polytope(int id) const {
    std::vector<QVec> pts;
    for (int i : components[id].vertex_ids) pts.push_back(polytope.vertices()[i]);
    return Polytope::from_points(polytope.rank(), std::move(pts));
}

namespace {

// Edges with exactly one endpoint in the component, oriented to leave it.
std::vector<std::pair<int, int>> leaving_edges(const Polytope& p, const std::vector<Face>& all_faces,
                                               const std::vector<int>& comp_verts) {
    std::vector<char> in_comp(p.vertices().size(), 0);
    for (int i : comp_verts) in_comp[i] = 1;
    std::vector<std::pair<int, int>> out;
    for (const auto& f : all_faces) {
        if (f.dim != 1 || f.vertex_ids.size() != 2) continue;
        int a = f.vertex_ids[0], b = f.vertex_ids[1];
        if (in_comp[a] + in_comp[b] != 1) continue;
        if (in_comp[b]) std::swap(a, b);
        out.push_back({a, b});
    }
    return out;
}

// Unit-step rule at an extremal component: the primitive direction of every
// leaving edge must pair to sign and the edge must not cross more than one
// weight unit.
bool check_equalized(const ActionAnalysis& an, const std::vector<Face>& all_faces, int comp,
                     int sign, std::vector<EdgeWitness>& witnesses) {
    const auto& p = an.polytope;
    bool ok = true;
    for (auto [a, b] : leaving_edges(p, all_faces, an.components[comp].vertex_ids)) {
        QVec dir = qsub(p.vertices()[b], p.vertices()[a]);
        Rat inc = dot(dir, an.v);
        Int prim = dot(primitive_direction(dir), an.v);
        bool good = (prim == sign) && (inc * sign <= 1) && (inc * sign > 0);
        if (!good) {
            witnesses.push_back(EdgeWitness{p.vertices()[a], p.vertices()[b], inc, prim});
            ok = false;
        }
    }
    return ok;
}

} // namespace

bool is_q_factorial(const Polytope& p, std::vector<int>* nonsimple) {
    bool ok = true;
    for (size_t i = 0; i < p.vertices().size(); ++i) {
        int tight = 0;
        for (const auto& f : p.facets()) {
            if (dot(p.vertices()[i], f.normal) + f.offset == 0) ++tight;
        }
        if (tight != p.dim()) {
            ok = false;
            if (nonsimple) nonsimple->push_back(static_cast<int>(i));
        }
    }
    return ok;
}

Polytope quotient_model_at(const ActionAnalysis& a, const Rat& level) {
    return project_level_set(slice(a.polytope, a.v, level), a.split);
}

Polytope quotient_model(const ActionAnalysis& a, int interval) {
    if (interval < 0 || interval >= a.criticality) throw input_error("quotient interval out of range");
    return quotient_model_at(a, a.interval_mid(interval));
}

ActionAnalysis analyze_action(const Polytope& p, const IVec& v) {
    if (!p.valid() || !p.full_dimensional()) throw precondition_error("analyze_action: polytope must be full-dimensional");
    if (is_zero(v)) throw precondition_error("analyze_action: trivial action (zero covector)");
    if (!is_primitive(v)) throw precondition_error("analyze_action: covector must be primitive");
    Rat lo = min_pairing(p, v), hi = max_pairing(p, v);
    if (lo == hi) throw precondition_error("analyze_action: trivial action (constant on the polytope)");

    ActionAnalysis an;
    an.v = v;
    an.split = lattice_split(v);
    // normalize so the minimal weight is 0
    QVec shift = qscale(-lo, to_qvec(an.split.section()));
    an.shift = shift;
    an.polytope = p.translate(shift);

    const Polytope& P = an.polytope;
    auto all_faces = faces(P);

    // maximal v-constant faces
    std::vector<const Face*> constant;
    for (const auto& f : all_faces) {
        if (f.dim < 0) continue;
        Rat w = dot(P.vertices()[f.vertex_ids[0]], v);
        bool flat = true;
        for (int id : f.vertex_ids) {
            if (dot(P.vertices()[id], v) != w) { flat = false; break; }
        }
        if (flat) constant.push_back(&f);
    }
    for (const Face* f : constant) {
        bool maximal = true;
        for (const Face* g : constant) {
            if (g == f || g->vertex_ids.size() <= f->vertex_ids.size()) continue;
            if (std::includes(g->vertex_ids.begin(), g->vertex_ids.end(), f->vertex_ids.begin(),
                              f->vertex_ids.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            an.components.push_back(FixedComponent{f->vertex_ids, dot(P.vertices()[f->vertex_ids[0]], v),
                                                   f->dim, ComponentKind::inner});
        }
    }
    std::sort(an.components.begin(), an.components.end(), [](const FixedComponent& a, const FixedComponent& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.vertex_ids < b.vertex_ids;
    });

    for (const auto& c : an.components) {
        if (an.critical.empty() || an.critical.back() != c.weight) an.critical.push_back(c.weight);
    }
    an.criticality = static_cast<int>(an.critical.size()) - 1;
    an.bandwidth = an.critical.back();

    int at_min = 0, at_max = 0;
    for (size_t i = 0; i < an.components.size(); ++i) {
        if (an.components[i].weight == an.critical.front()) {
            an.sink = static_cast<int>(i);
            an.components[i].kind = ComponentKind::sink;
            ++at_min;
        }
        if (an.components[i].weight == an.critical.back()) {
            an.source = static_cast<int>(i);
            an.components[i].kind = ComponentKind::source;
            ++at_max;
        }
    }
    if (at_min != 1 || at_max != 1) throw internal_error("analyze_action: extremal components not unique");

    for (const auto& f : P.facets()) {
        Rat fl, fh;
        bool first = true;
        for (const auto& w : P.vertices()) {
            if (dot(w, f.normal) + f.offset != 0) continue;
            Rat val = dot(w, v);
            if (first) { fl = fh = val; first = false; }
            else { fl = std::min(fl, val); fh = std::max(fh, val); }
        }
        an.facet_ranges.push_back(FacetRange{fl, fh, fl == fh});
    }

    an.equalized_sink = check_equalized(an, all_faces, an.sink, 1, an.equalized_witnesses);
    an.equalized_source = check_equalized(an, all_faces, an.source, -1, an.equalized_witnesses);
    an.equalized_inner = true;
    for (size_t i = 0; i < an.components.size(); ++i) {
        if (an.components[i].kind != ComponentKind::inner) continue;
        // inner components see edges on both sides; either sign is fine
        for (auto [a, b] : leaving_edges(P, all_faces, an.components[i].vertex_ids)) {
            QVec dir = qsub(P.vertices()[b], P.vertices()[a]);
            Rat inc = dot(dir, v);
            Int prim = dot(primitive_direction(dir), v);
            Int abs_prim = prim < 0 ? Int(-prim) : prim;
            Rat abs_inc = inc < 0 ? -inc : inc;
            if (!(abs_prim == 1 && abs_inc <= 1)) {
                an.equalized_inner = false;
                an.inner_witnesses.push_back(EdgeWitness{P.vertices()[a], P.vertices()[b], inc, prim});
            }
        }
    }

    // B-type: near-extremal quotient models match the extremal components in
    // the quotient lattice
    {
        Polytope near_sink = quotient_model_at(an, an.interval_mid(0));
        Polytope sink_model = project_level_set(an.component_polytope(an.sink), an.split);
        an.b_type_sink_ok = models_equivalent(near_sink, sink_model);
        Polytope near_source = quotient_model_at(an, an.interval_mid(an.criticality - 1));
        Polytope source_model = project_level_set(an.component_polytope(an.source), an.split);
        an.b_type_source_ok = models_equivalent(near_source, source_model);
        an.b_type = an.b_type_sink_ok && an.b_type_source_ok;
    }

    // admissibility per interval: every non-fixed facet range must cover it
    for (int i = 0; i < an.criticality; ++i) {
        std::vector<int> bad;
        for (size_t fi = 0; fi < an.facet_ranges.size(); ++fi) {
            const auto& r = an.facet_ranges[fi];
            if (r.v_constant && (r.lo == an.critical.front() || r.lo == an.critical.back())) continue;
            if (!(r.lo <= an.critical[i] && r.hi >= an.critical[i + 1])) bad.push_back(static_cast<int>(fi));
        }
        an.admissible.push_back(bad.empty());
        an.offending_facets.push_back(std::move(bad));
    }

    // independent bordism path: every non-extreme-fixed facet must flow from
    // the sink component to the source component
    {
        bool flow_ok = true;
        for (size_t fi = 0; fi < P.facets().size(); ++fi) {
            const auto& r = an.facet_ranges[fi];
            if (r.v_constant && (r.lo == an.critical.front() || r.lo == an.critical.back())) continue;
            std::vector<int> min_face, max_face;
            for (size_t vi = 0; vi < P.vertices().size(); ++vi) {
                if (dot(P.vertices()[vi], P.facets()[fi].normal) + P.facets()[fi].offset != 0) continue;
                if (dot(P.vertices()[vi], v) == r.lo) min_face.push_back(static_cast<int>(vi));
                if (dot(P.vertices()[vi], v) == r.hi) max_face.push_back(static_cast<int>(vi));
            }
            auto contained_in = [&](const std::vector<int>& verts, int comp) {
                return std::includes(an.components[comp].vertex_ids.begin(),
                                     an.components[comp].vertex_ids.end(), verts.begin(), verts.end());
            };
            if (!contained_in(min_face, an.sink) || !contained_in(max_face, an.source)) {
                flow_ok = false;
                an.flow_offenders.push_back(static_cast<int>(fi));
            }
        }
        bool all_admissible = true;
        for (bool b : an.admissible) all_admissible = all_admissible && b;
        an.bordism = an.b_type && all_admissible;
        an.bordism_flow = an.b_type && flow_ok;
        if (an.bordism != an.bordism_flow) throw internal_error("analyze_action: bordism code paths disagree");
    }

    an.q_factorial = is_q_factorial(P, &an.nonsimple_vertices);
    return an;
}

std::pair<bool, bool> is_equalized_at_extremes(const ActionAnalysis& a) {
    return {a.equalized_sink, a.equalized_source};
}

bool is_b_type(const ActionAnalysis& a) { return a.b_type; }

std::vector<bool> admissible_quotients(const ActionAnalysis& a) { return a.admissible; }

bool is_bordism(const ActionAnalysis& a) { return a.bordism; }

int extend_divisor(const ActionAnalysis& a, int interval, int quotient_facet) {
    if (interval < 0 || interval >= a.criticality) throw input_error("extend_divisor: interval out of range");
    Rat tau = a.interval_mid(interval);
    Polytope model = quotient_model_at(a, tau);
    if (quotient_facet < 0 || quotient_facet >= static_cast<int>(model.facets().size())) {
        throw input_error("extend_divisor: facet index out of range");
    }
    const auto& qf = model.facets()[quotient_facet];

    // lift the facet's vertices back to the tau-level of P
    std::vector<QVec> lifted;
    for (const auto& y : model.vertices()) {
        if (dot(y, qf.normal) + qf.offset != 0) continue;
        QVec hom = y;
        hom.push_back(tau);
        lifted.push_back(mat_apply(a.split.from_split, hom));
    }
    int match = -1;
    for (size_t fi = 0; fi < a.polytope.facets().size(); ++fi) {
        if (a.facet_ranges[fi].v_constant) continue;
        const auto& f = a.polytope.facets()[fi];
        bool all_on = true;
        for (const auto& u : lifted) {
            if (dot(u, f.normal) + f.offset != 0) { all_on = false; break; }
        }
        if (all_on) {
            if (match >= 0) throw verification_error("extend_divisor: facet lift is not unique");
            match = static_cast<int>(fi);
        }
    }
    if (match < 0) {
        throw verification_error("extend_divisor: no facet of the pair extends the quotient facet");
    }
    return match;
}

} // namespace tbw
