#include "tbw/io.hpp"

#include <sstream>

namespace tbw {

namespace {

const int64_t kSafeMax = 9007199254740992LL; // 2^53, safe in every JSON reader

json int_to_json(const Int& x) {
    if (x <= kSafeMax && x >= -kSafeMax) return json(static_cast<int64_t>(x));
    return json(x.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw input_error("expected an integer");
}

} // namespace

json to_json(const Rat& q) {
    if (is_integral(q)) return int_to_json(rat_num(q));
    return json(rat_to_string(q));
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<int64_t>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw input_error("expected an integer or a \"p/q\" string");
}

json to_json(const IVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(int_to_json(x));
    return arr;
}

json to_json(const QVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

IVec ivec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    IVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

QVec qvec_from_json(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of rationals");
    QVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json to_json(const Polytope& p) {
    json out;
    out["rank"] = p.rank();
    out["dim"] = p.dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    out["vertices"] = verts;
    json facets = json::array();
    for (const auto& f : p.facets()) {
        facets.push_back(json{{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
    }
    out["facets"] = facets;
    if (!p.span_equations().empty()) {
        json eqs = json::array();
        for (const auto& e : p.span_equations()) {
            eqs.push_back(json{{"normal", to_json(e.normal)}, {"offset", int_to_json(e.offset)}});
        }
        out["span_equations"] = eqs;
    }
    return out;
}

Polytope polytope_from_json(const json& j) {
    if (!j.is_object()) throw input_error("polytope: expected an object");
    if (!j.contains("rank")) throw input_error("polytope: missing rank");
    int rank = j["rank"].get<int>();
    if (rank < 0 || rank > 16) throw input_error("polytope: unsupported rank");
    if (j.contains("vertices")) {
        std::vector<QVec> pts;
        for (const auto& v : j["vertices"]) pts.push_back(qvec_from_json(v));
        return Polytope::from_points(rank, std::move(pts));
    }
    if (j.contains("halfspaces")) {
        std::vector<Halfspace> hs;
        for (const auto& h : j["halfspaces"]) {
            if (!h.contains("normal") || !h.contains("offset")) {
                throw input_error("polytope: halfspace needs normal and offset");
            }
            hs.push_back(Halfspace{ivec_from_json(h["normal"]), rat_from_json(h["offset"])});
        }
        return Polytope::from_halfspaces(rank, hs);
    }
    throw input_error("polytope: need vertices or halfspaces");
}

json to_json(const Fan& f) {
    json out;
    out["rank"] = f.rank;
    json rays = json::array();
    for (const auto& r : f.rays) rays.push_back(to_json(r));
    out["rays"] = rays;
    out["maximal_cones"] = f.max_cones;
    out["complete"] = f.complete;
    return out;
}

json to_json(const GradedCountTable& t) {
    json out;
    out["m_max"] = int_to_json(t.m_max);
    json entries = json::array();
    for (const auto& [key, c] : t.counts) {
        entries.push_back(json{{"m", int_to_json(key.first)},
                               {"level", int_to_json(key.second)},
                               {"count", int_to_json(c)}});
    }
    out["counts"] = entries;
    return out;
}

json to_json(const GordanCertificate& c) {
    json out;
    json basis = json::array();
    for (const auto& b : c.basis) basis.push_back(to_json(b));
    out["hilbert_basis"] = basis;
    out["generation_degree"] = int_to_json(c.generation_degree);
    out["verified_to_degree"] = int_to_json(c.bound);
    return out;
}

namespace {

const char* kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::sink: return "sink";
        case ComponentKind::source: return "source";
        default: return "inner";
    }
}

json witness_to_json(const EdgeWitness& w) {
    return json{{"from", to_json(w.from)},
                {"to", to_json(w.to)},
                {"increment", to_json(w.increment)},
                {"primitive_step", int_to_json(w.primitive_step)}};
}

} // namespace

json to_json(const ActionAnalysis& a) {
    json out;
    out["polytope"] = to_json(a.polytope);
    out["direction"] = to_json(a.v);
    out["translation"] = to_json(a.shift);
    json comps = json::array();
    for (const auto& c : a.components) {
        json jc;
        jc["kind"] = kind_name(c.kind);
        jc["weight"] = to_json(c.weight);
        jc["dim"] = c.dim;
        json verts = json::array();
        for (int id : c.vertex_ids) verts.push_back(to_json(a.polytope.vertices()[id]));
        jc["vertices"] = verts;
        comps.push_back(jc);
    }
    out["fixed_components"] = comps;
    json crit = json::array();
    for (const auto& c : a.critical) crit.push_back(to_json(c));
    out["critical_values"] = crit;
    out["bandwidth"] = to_json(a.bandwidth);
    out["criticality"] = a.criticality;
    json pred;
    pred["equalized_at_sink"] = a.equalized_sink;
    pred["equalized_at_source"] = a.equalized_source;
    pred["equalized_inner_diagnostic"] = a.equalized_inner;
    pred["b_type"] = a.b_type;
    pred["admissible"] = a.admissible;
    pred["bordism"] = a.bordism;
    pred["q_factorial"] = a.q_factorial;
    out["predicates"] = pred;
    json witnesses;
    if (!a.equalized_witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : a.equalized_witnesses) ws.push_back(witness_to_json(w));
        witnesses["equalized"] = ws;
    }
    if (!a.inner_witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : a.inner_witnesses) ws.push_back(witness_to_json(w));
        witnesses["equalized_inner"] = ws;
    }
    bool any_bad = false;
    for (const auto& v : a.offending_facets) any_bad = any_bad || !v.empty();
    if (any_bad) {
        json ws = json::array();
        for (size_t i = 0; i < a.offending_facets.size(); ++i) {
            for (int f : a.offending_facets[i]) {
                ws.push_back(json{{"interval", i},
                                  {"facet_normal", to_json(a.polytope.facets()[f].normal)},
                                  {"range", json::array({to_json(a.facet_ranges[f].lo),
                                                         to_json(a.facet_ranges[f].hi)})}});
            }
        }
        witnesses["non_admissible"] = ws;
    }
    if (!a.nonsimple_vertices.empty()) {
        json ws = json::array();
        for (int id : a.nonsimple_vertices) ws.push_back(to_json(a.polytope.vertices()[id]));
        witnesses["non_simple_vertices"] = ws;
    }
    if (!witnesses.empty()) out["witnesses"] = witnesses;
    return out;
}

std::string wall_tag_name(WallTag t) {
    switch (t) {
        case WallTag::isomorphism: return "isomorphism";
        case WallTag::small_modification: return "small-modification";
        default: return "divisorial-drop";
    }
}

namespace {

json slice_to_json(const QuotientSlice& s) {
    return json{{"index", s.index},
                {"level", to_json(s.level)},
                {"polytope", to_json(s.polytope)},
                {"fan", to_json(s.fan)}};
}

} // namespace

json to_json(const QuotientChain& c) {
    json out;
    json slices = json::array();
    for (const auto& s : c.slices) slices.push_back(slice_to_json(s));
    out["quotients"] = slices;
    json walls = json::array();
    for (const auto& w : c.walls) {
        walls.push_back(json{{"index", w.index},
                             {"tag", wall_tag_name(w.tag)},
                             {"coarsening_ok", w.coarsening_ok},
                             {"semigeometric", slice_to_json(w.semigeometric)}});
    }
    out["walls"] = walls;
    return out;
}

json to_json(const SectionIsoReport& r) {
    json out;
    out["preconditions_ok"] = r.preconditions_ok;
    auto identity_to_json = [](const CountIdentity& c) {
        return json{{"m", int_to_json(c.m)},
                    {"levels", json::array({int_to_json(c.lo), int_to_json(c.hi)})},
                    {"expected", int_to_json(c.expected)},
                    {"got", int_to_json(c.got)},
                    {"pass", c.pass}};
    };
    json slabs = json::array();
    for (const auto& c : r.slab_identities) {
        if (!c.pass) slabs.push_back(identity_to_json(c));
    }
    out["slab_identities"] = json{{"checked", r.slab_identities.size()}, {"failures", slabs}};
    json levels = json::array();
    for (const auto& c : r.level_identities) {
        if (!c.pass) levels.push_back(identity_to_json(c));
    }
    out["restriction_identities"] = json{{"checked", r.level_identities.size()}, {"failures", levels}};
    out["all_pass"] = r.all_pass;
    return out;
}

json to_json(const ExtractedMdp& m) {
    json out;
    out["sink_model"] = to_json(m.sink_model);
    out["source_model"] = to_json(m.source_model);
    out["bandwidth"] = to_json(m.bandwidth);
    out["rays_match"] = m.rays_match;
    out["induced_map_is_isomorphism"] = m.fans_equal;
    json levels = json::array();
    for (const auto& [c, model] : m.level_models) {
        levels.push_back(json{{"level", to_json(c)}, {"model", to_json(model)}});
    }
    out["level_models"] = levels;
    return out;
}

json to_json(const ChamberReport& r) {
    json out;
    json chambers = json::array();
    for (const auto& c : r.chambers) {
        json jc;
        jc["index"] = c.index;
        jc["interval"] = json::array({to_json(c.lo), to_json(c.hi)});
        json samples = json::array();
        for (const auto& s : c.samples) {
            samples.push_back(json{{"beta", to_json(s.beta)},
                                   {"gamma", to_json(s.gamma)},
                                   {"level", to_json(s.level)},
                                   {"matches_quotient", s.matches_quotient}});
        }
        jc["samples"] = samples;
        jc["constant"] = c.constant;
        jc["equals_quotient"] = c.equals_quotient;
        chambers.push_back(jc);
    }
    out["chambers"] = chambers;
    json walls = json::array();
    for (size_t i = 0; i < r.wall_separates.size(); ++i) {
        walls.push_back(json{{"tag", wall_tag_name(r.wall_tags[i])},
                             {"models_differ", r.wall_separates[i]}});
    }
    out["walls"] = walls;
    out["all_pass"] = r.all_pass;
    return out;
}

json to_json(const PrunedPair& p) {
    json out;
    out["polytope"] = to_json(p.polytope);
    if (p.integral_model) out["integral_model"] = to_json(*p.integral_model);
    out["provenance"] = json{{"source", to_json(p.source_polytope)},
                             {"direction", to_json(p.v)},
                             {"rho_minus", to_json(p.spec.rho_minus)},
                             {"rho_plus", to_json(p.spec.rho_plus)},
                             {"intervals", json::array({p.spec.h, p.spec.j})},
                             {"denominator", int_to_json(p.spec.d)}};
    out["certificate"] = to_json(p.certificate);
    out["slice_facets"] = json::array({p.sink_facet, p.source_facet});
    return out;
}

PrunedPair pruned_from_json(const json& j) {
    const json& prov = j.at("provenance");
    Polytope source = polytope_from_json(prov.at("source"));
    IVec v = ivec_from_json(prov.at("direction"));
    return prune(source, v, rat_from_json(prov.at("rho_minus")), rat_from_json(prov.at("rho_plus")));
}

json to_json(const PruningTheoremReport& r) {
    json out;
    json steps = json::array();
    for (size_t i = 0; i < r.steps.size(); ++i) {
        json js;
        js["step"] = i + 1;
        js["name"] = r.steps[i].name;
        js["pass"] = r.steps[i].pass;
        if (!r.steps[i].detail.empty()) js["detail"] = r.steps[i].detail;
        steps.push_back(js);
    }
    out["steps"] = steps;
    out["bordism_paths_agree"] = r.consistency_ok;
    out["all_pass"] = r.all_pass;
    return out;
}

json to_json(const MdpInput& m) {
    json out;
    out["P_minus"] = to_json(m.p_minus);
    json coeffs = json::array();
    for (const auto& [ray, b] : m.plus_coeffs) {
        coeffs.push_back(json{{"ray", to_json(ray)}, {"b", int_to_json(b)}});
    }
    out["plus_coeffs"] = coeffs;
    return out;
}

MdpInput mdp_from_json(const json& j) {
    if (!j.contains("P_minus") || !j.contains("plus_coeffs")) {
        throw input_error("divisor pair input needs P_minus and plus_coeffs");
    }
    MdpInput m;
    m.p_minus = polytope_from_json(j["P_minus"]);
    for (const auto& c : j["plus_coeffs"]) {
        if (!c.contains("ray") || !c.contains("b")) {
            throw input_error("plus_coeffs entries need ray and b");
        }
        m.plus_coeffs.push_back({ivec_from_json(c["ray"]), int_from_json(c["b"])});
    }
    return m;
}

json to_json(const MdpValidation& v) {
    json out;
    out["valid"] = v.valid;
    out["rays_match"] = v.rays_match;
    if (!v.reasons.empty()) out["reasons"] = v.reasons;
    if (v.p_plus) out["P_plus"] = to_json(*v.p_plus);
    if (v.certificate) out["certificate"] = to_json(*v.certificate);
    return out;
}

json to_json(const RealizationReport& r) {
    json out;
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json jv;
        jv["name"] = v.name;
        jv["pass"] = v.pass;
        if (!v.detail.empty()) jv["detail"] = v.detail;
        verdicts.push_back(jv);
    }
    out["verdicts"] = verdicts;
    out["chain"] = to_json(r.chain);
    out["all_pass"] = r.all_pass;
    return out;
}

json to_json(const CompareReport& r) {
    json out;
    out["lengths_match"] = r.lengths_match;
    out["models_match"] = r.models_match;
    out["tags_match"] = r.tags_match;
    out["all_pass"] = r.all_pass;
    return out;
}

std::string render_chain_text(const QuotientChain& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.slices.size(); ++i) {
        os << "GX(" << c.slices[i].index << "," << c.slices[i].index + 1 << ")";
        if (i + 1 < c.slices.size()) {
            os << " ⇢[" << wall_tag_name(c.walls[i].tag) << "] ";
        }
    }
    os << "\n";
    for (const auto& s : c.slices) {
        os << "  GX(" << s.index << "," << s.index + 1 << "): level " << rat_to_string(s.level)
           << ", model with " << s.polytope.vertices().size() << " vertices / "
           << s.fan.rays.size() << " rays\n";
    }
    return os.str();
}

} // namespace tbw
