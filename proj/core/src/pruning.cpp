#include "tbw/pruning.hpp"

#include <algorithm>
#include <set>

namespace tbw {

Polytope truncate_pair(const Polytope& p_normalized, const IVec& v, const Rat& lo, const Rat& hi) {
    auto slab = try_slab(p_normalized, v, lo, hi);
    if (!slab) throw input_error("truncate: empty slab");
    return *slab;
}

PrunedPair prune(const Polytope& p, const IVec& v, const Rat& rho_minus, const Rat& rho_plus) {
    if (rho_minus >= rho_plus) throw precondition_error("prune: rho_minus must be below rho_plus");
    ActionAnalysis an = analyze_action(p, v);

    PruneSpec spec;
    spec.rho_minus = rho_minus;
    spec.rho_plus = rho_plus;
    for (int i = 0; i < an.criticality; ++i) {
        if (an.critical[i] < rho_minus && rho_minus < an.critical[i + 1]) spec.h = i;
        if (an.critical[i] < rho_plus && rho_plus < an.critical[i + 1]) spec.j = i;
    }
    if (spec.h < 0 || spec.j < 0) {
        throw precondition_error("prune: rho values must lie strictly inside intervals between critical values");
    }
    spec.d = lcm(rat_den(rho_minus), rat_den(rho_plus));

    PrunedPair out;
    out.spec = spec;
    out.v = v;
    out.source_polytope = an.polytope;
    out.polytope = truncate_pair(an.polytope, v, rho_minus, rho_plus);
    Polytope scaled = out.polytope.dilate(Rat(spec.d));
    if (scaled.is_lattice()) out.integral_model = scaled;

    for (size_t fi = 0; fi < out.polytope.facets().size(); ++fi) {
        const auto& f = out.polytope.facets()[fi];
        if (f.normal == v && Rat(-1) * f.offset == rho_minus) out.sink_facet = static_cast<int>(fi);
        if (f.normal == iscale(Int(-1), v) && f.offset == rho_plus) out.source_facet = static_cast<int>(fi);
    }
    if (out.sink_facet < 0 || out.source_facet < 0) {
        throw internal_error("prune: slice facets not found");
    }

    GenerationResult gen = generation_degree(out.polytope);
    Cone cone = cone_over(out.polytope);
    std::vector<IVec> basis = hilbert_basis(cone);
    Int max_height = 1;
    for (const auto& b : basis) max_height = std::max(max_height, b.back());
    GordanCertificate cert;
    cert.basis = basis;
    cert.generation_degree = gen.dprime;
    cert.bound = 2 * gen.dprime * max_height;
    auto check = semigroup_generated_check(basis, cert.bound);
    if (!check.pass) throw internal_error("prune: certificate fails its own generation check");
    out.certificate = std::move(cert);
    return out;
}

namespace {

bool same_vertex_set(const Polytope& host, const std::vector<int>& ids, const Polytope& face) {
    std::set<QVec> a, b;
    for (int i : ids) a.insert(host.vertices()[i]);
    for (const auto& w : face.vertices()) b.insert(w);
    return a == b;
}

} // namespace

PruningTheoremReport verify_pruning_theorem(const Polytope& source, const IVec& v, const PrunedPair& pruned) {
    ActionAnalysis src = analyze_action(source, v);
    if (!(src.polytope == pruned.source_polytope) || v != pruned.v) {
        throw precondition_error("verify_pruning_theorem: pruned pair does not come from this source");
    }
    const Rat& lo = pruned.spec.rho_minus;
    const Rat& hi = pruned.spec.rho_plus;
    ActionAnalysis pr = analyze_action(pruned.polytope, v);
    // the pruned analysis normalizes weights to start at 0; shift levels back
    Rat pr_shift = lo;

    PruningTheoremReport rep;

    // Step 1: extremal quotients of the truncation match the source quotients
    {
        Polytope pr_sink = project_level_set(pr.component_polytope(pr.sink), pr.split);
        Polytope pr_source = project_level_set(pr.component_polytope(pr.source), pr.split);
        bool ok_sink = models_equivalent(pr_sink, geometric_quotient(src, pruned.spec.h).polytope);
        bool ok_source = models_equivalent(pr_source, geometric_quotient(src, pruned.spec.j).polytope);
        rep.steps.push_back(PruningStep{"extremal quotients", ok_sink && ok_source,
                                        ok_sink ? (ok_source ? "" : "source mismatch") : "sink mismatch"});
    }

    // Step 2: normality via the saturation check at the certificate bound
    {
        auto check = semigroup_generated_check(pruned.certificate.basis, pruned.certificate.bound);
        rep.steps.push_back(PruningStep{"normality", check.pass,
                                        "projective spectra of saturated semigroup rings are normal; "
                                        "saturation checked to the certificate bound"});
    }

    // Step 3: equivariant birationality: identical lattice data on the open slab
    {
        bool ok = true;
        Int m_chk = std::max(Int(4), Int(2 * pruned.spec.d));
        for (Int m = 1; m <= m_chk && ok; ++m) {
            Polytope ms = src.polytope.dilate(Rat(m));
            Polytope mp = pruned.polytope.dilate(Rat(m));
            std::vector<IVec> from_src, from_pr;
            for (const auto& u : lattice_points(ms)) {
                Rat level = Rat(dot(u, v));
                if (Rat(m) * lo < level && level < Rat(m) * hi) from_src.push_back(u);
            }
            for (const auto& u : lattice_points(mp)) {
                Rat level = Rat(dot(u, v));
                if (Rat(m) * lo < level && level < Rat(m) * hi) from_pr.push_back(u);
            }
            ok = (from_src == from_pr);
        }
        rep.steps.push_back(PruningStep{"equivariant birationality", ok, ""});
    }

    // Step 4: fixed locus: the two slice facets plus the source's inner
    // components with weights strictly inside the slab. The pruned analysis
    // translates weights to start at 0, so source-side faces are shifted into
    // its coordinates before comparing vertex sets.
    {
        bool ok = true;
        std::string detail;
        std::vector<int> expected_inner;
        for (size_t ci = 0; ci < src.components.size(); ++ci) {
            if (lo < src.components[ci].weight && src.components[ci].weight < hi) {
                expected_inner.push_back(static_cast<int>(ci));
            }
        }
        std::vector<const FixedComponent*> got_inner;
        for (const auto& c : pr.components) {
            if (c.kind == ComponentKind::inner) got_inner.push_back(&c);
        }
        if (expected_inner.size() != got_inner.size()) {
            ok = false;
            detail = "inner component count mismatch";
        } else {
            for (int ci : expected_inner) {
                Polytope face = src.component_polytope(ci).translate(pr.shift);
                bool found = false;
                for (const auto* g : got_inner) {
                    if (same_vertex_set(pr.polytope, g->vertex_ids, face)) { found = true; break; }
                }
                if (!found) { ok = false; detail = "missing inner component"; break; }
            }
        }
        // extremal components must be the slice facets
        auto facet_verts = [&](int facet_id) {
            std::vector<QVec> pts;
            const auto& f = pruned.polytope.facets()[facet_id];
            for (const auto& w : pruned.polytope.vertices()) {
                if (dot(w, f.normal) + f.offset == 0) pts.push_back(w);
            }
            return Polytope::from_points(pruned.polytope.rank(), pts);
        };
        Polytope sink_face = facet_verts(pruned.sink_facet).translate(pr.shift);
        Polytope source_face = facet_verts(pruned.source_facet).translate(pr.shift);
        if (!same_vertex_set(pr.polytope, pr.sink_component().vertex_ids, sink_face)) {
            ok = false;
            detail = "sink is not the lower slice facet";
        }
        if (!same_vertex_set(pr.polytope, pr.source_component().vertex_ids, source_face)) {
            ok = false;
            detail = "source is not the upper slice facet";
        }
        std::vector<Rat> expected_crit{lo};
        for (const Rat& c : src.critical) {
            if (lo < c && c < hi) expected_crit.push_back(c);
        }
        expected_crit.push_back(hi);
        std::vector<Rat> got_crit;
        for (const Rat& c : pr.critical) got_crit.push_back(c + pr_shift);
        if (expected_crit != got_crit) {
            ok = false;
            detail = "critical values differ";
        }
        rep.steps.push_back(PruningStep{"fixed locus", ok, detail});
    }

    // Step 5: B-type
    rep.steps.push_back(PruningStep{"b-type", pr.b_type, ""});

    // Step 6: bordism, cross-checked against the source-side facet span test
    {
        bool source_side = true;
        std::string detail;
        for (size_t fi = 0; fi < src.polytope.facets().size(); ++fi) {
            const auto& r = src.facet_ranges[fi];
            // facets surviving as facets of the truncation
            Rat cutlo = std::max(r.lo, lo), cuthi = std::min(r.hi, hi);
            bool survives = r.v_constant ? (lo <= r.lo && r.lo <= hi) : (cutlo < cuthi);
            if (!survives) continue;
            if (!(r.lo <= lo && hi <= r.hi)) {
                source_side = false;
                if (!detail.empty()) detail += ", ";
                detail += "facet " + std::to_string(fi) + " spans [" + rat_to_string(cutlo) + ", " +
                          rat_to_string(cuthi) + "]";
            }
        }
        bool all_adm = true;
        for (bool b : pr.admissible) all_adm = all_adm && b;
        rep.consistency_ok = (all_adm == source_side);
        rep.steps.push_back(PruningStep{"bordism", pr.bordism, detail});
    }

    rep.all_pass = true;
    for (const auto& s : rep.steps) rep.all_pass = rep.all_pass && s.pass;
    rep.all_pass = rep.all_pass && rep.consistency_ok;
    return rep;
}

Cone gordan_cone(const std::vector<Int>& weights, const Rat& rho_minus, const Rat& rho_plus) {
    int n = static_cast<int>(weights.size());
    if (n == 0) throw input_error("gordan_cone: no weights");
    Int den = lcm(rat_den(rho_minus), rat_den(rho_plus));
    std::vector<IVec> rows;
    IVec low(n), high(n);
    for (int i = 0; i < n; ++i) {
        low[i] = rat_num((Rat(weights[i]) - rho_minus) * Rat(den));
        high[i] = rat_num((rho_plus - Rat(weights[i])) * Rat(den));
    }
    rows.push_back(primitive(low));
    rows.push_back(primitive(high));
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        rows.push_back(e);
    }
    return Cone::from_halfspaces(n, rows);
}

} // namespace tbw
