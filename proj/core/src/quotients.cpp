#include "tbw/quotients.hpp"

#include <algorithm>

namespace tbw {

QuotientSlice geometric_quotient(const ActionAnalysis& a, int i) {
    if (i < 0 || i >= a.criticality) throw input_error("geometric_quotient: interval index out of range");
    Rat lo = a.critical[i], hi = a.critical[i + 1];
    Rat mid = (lo + hi) / 2;
    Polytope model = quotient_model_at(a, mid);
    Fan fan = normal_fan(model);
    // the model must not depend on the sample point inside the open interval
    Rat quarter = lo + (hi - lo) / 4;
    Rat three_quarter = lo + (hi - lo) * 3 / 4;
    for (const Rat& t : {quarter, three_quarter}) {
        if (normal_fan(quotient_model_at(a, t)) != fan) {
            throw internal_error("geometric_quotient: model varies inside an interval");
        }
    }
    return QuotientSlice{i, mid, std::move(model), std::move(fan)};
}

QuotientSlice semigeometric_quotient(const ActionAnalysis& a, int i) {
    if (i < 0 || i > a.criticality) throw input_error("semigeometric_quotient: index out of range");
    Rat level = a.critical[i];
    Polytope model = quotient_model_at(a, level);
    Fan fan = normal_fan(model);
    return QuotientSlice{i, level, std::move(model), std::move(fan)};
}

QuotientChain quotient_chain(const ActionAnalysis& a) {
    QuotientChain chain;
    for (int i = 0; i < a.criticality; ++i) chain.slices.push_back(geometric_quotient(a, i));
    for (int i = 1; i < a.criticality; ++i) {
        Wall w;
        w.index = i;
        w.semigeometric = semigeometric_quotient(a, i);
        const Fan& left = chain.slices[i - 1].fan;
        const Fan& right = chain.slices[i].fan;
        if (left == right) w.tag = WallTag::isomorphism;
        else if (ray_set(left) == ray_set(right)) w.tag = WallTag::small_modification;
        else w.tag = WallTag::divisorial_drop;
        // inner semigeometric slices are full-dimensional in the quotient,
        // and both adjacent quotients must refine them
        w.coarsening_ok = fan_refines(left, w.semigeometric.fan) && fan_refines(right, w.semigeometric.fan);
        chain.walls.push_back(std::move(w));
    }
    return chain;
}

namespace {

bool check_preconditions(const ActionAnalysis& a, std::string& why) {
    if (!a.bordism) { why = "bordism"; return false; }
    if (!(a.equalized_sink && a.equalized_source)) { why = "equalized at extremes"; return false; }
    if (!a.q_factorial) { why = "q-factorial"; return false; }
    return true;
}

} // namespace

SectionIsoReport verify_section_isomorphisms(const ActionAnalysis& a, const Int& m_max) {
    SectionIsoReport rep;
    if (!check_preconditions(a, rep.failing_predicate)) {
        throw precondition_error("verify_section_isomorphisms: pair is not " + rep.failing_predicate);
    }
    rep.preconditions_ok = true;
    if (m_max < 2) throw input_error("verify_section_isomorphisms: m_max must be at least 2");

    // In a B-type pair the extremal components are facets cut out by +/- v.
    bool sink_facet = false, source_facet = false;
    for (const auto& f : a.polytope.facets()) {
        if (f.normal == a.v && f.offset == 0) sink_facet = true;
        if (f.normal == iscale(Int(-1), a.v) && f.offset == a.bandwidth) source_facet = true;
    }
    if (!sink_facet || !source_facet) {
        throw internal_error("verify_section_isomorphisms: extremal facets missing");
    }

    rep.all_pass = true;
    GradedCountTable table = graded_section_counts(a.polytope, a.v, m_max); // oracle side
    for (Int m = 1; m <= m_max; ++m) {
        Polytope mp = a.polytope.dilate(Rat(m));
        Int klo = rat_ceil(Rat(m) * a.critical.front());
        Int khi = rat_floor(Rat(m) * a.bandwidth);
        // truncation identities: graded sums against slab polytopes
        for (Int k1 = klo; k1 <= khi; ++k1) {
            for (Int k2 = k1; k2 <= khi; ++k2) {
                Int expected = 0;
                for (Int k = k1; k <= k2; ++k) expected += table.count(m, k);
                auto slab = try_slab(mp, a.v, Rat(k1), Rat(k2));
                Int got = slab ? Int(lattice_points(*slab).size()) : Int(0);
                bool pass = (expected == got);
                rep.slab_identities.push_back(CountIdentity{m, k1, k2, expected, got, pass});
                rep.all_pass = rep.all_pass && pass;
            }
        }
        // restriction identities: level counts against projected slices
        for (Int c = klo; c <= khi; ++c) {
            Polytope proj = project_level_set(slice(mp, a.v, Rat(c)), a.split);
            Int got(lattice_points(proj).size());
            Int expected = table.count(m, c);
            bool pass = (expected == got);
            rep.level_identities.push_back(CountIdentity{m, c, c, expected, got, pass});
            rep.all_pass = rep.all_pass && pass;
        }
    }
    return rep;
}

ExtractedMdp extract_mdp(const ActionAnalysis& a) {
    std::string why;
    if (!check_preconditions(a, why)) {
        throw precondition_error("extract_mdp: pair is not " + why);
    }
    ExtractedMdp out;
    out.bandwidth = a.bandwidth;
    out.sink_model = project_level_set(a.component_polytope(a.sink), a.split);
    out.source_model = quotient_model_at(a, a.bandwidth);
    out.sink_fan = normal_fan(out.sink_model);
    out.source_fan = normal_fan(out.source_model);
    out.rays_match = (ray_set(out.sink_fan) == ray_set(out.source_fan));
    out.fans_equal = (out.sink_fan == out.source_fan);
    if (!out.rays_match) {
        throw verification_error("extract_mdp: end models do not share their rays; the induced map is not small");
    }
    // level family: integral levels plus the critical values
    std::vector<Rat> levels;
    for (Int c = 0; c <= rat_floor(a.bandwidth); ++c) levels.push_back(Rat(c));
    for (const Rat& c : a.critical) levels.push_back(c);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    for (const Rat& c : levels) out.level_models.push_back({c, quotient_model_at(a, c)});
    return out;
}

namespace {

// Deterministic interior sample positions; the leading entries stress the
// near-wall region at 1/16 of the interval length.
std::vector<Rat> sample_positions(int count) {
    static const std::vector<Rat> base = {
        Rat(1, 16), Rat(15, 16), Rat(1, 2), Rat(1, 4), Rat(3, 4),
        Rat(1, 8),  Rat(7, 8),   Rat(3, 8), Rat(5, 8), Rat(5, 16),
        Rat(11, 16), Rat(7, 16), Rat(9, 16), Rat(3, 16), Rat(13, 16)};
    std::vector<Rat> out;
    for (int i = 0; i < count && i < static_cast<int>(base.size()); ++i) out.push_back(base[i]);
    return out;
}

} // namespace

ChamberReport chamber_decomposition(const ActionAnalysis& a, int samples_per_chamber) {
    std::string why;
    if (!check_preconditions(a, why)) {
        throw precondition_error("chamber_decomposition: pair is not " + why);
    }
    if (samples_per_chamber < 3) throw input_error("chamber_decomposition: need at least 3 samples per chamber");

    ChamberReport rep;
    rep.all_pass = true;
    QuotientChain chain = quotient_chain(a);
    std::vector<Fan> chamber_fans;
    for (int i = 0; i < a.criticality; ++i) {
        ChamberVerdict verdict;
        verdict.index = i;
        verdict.lo = a.critical[i];
        verdict.hi = a.critical[i + 1];
        std::vector<Fan> fans;
        for (const Rat& lambda : sample_positions(samples_per_chamber)) {
            // divisor beta*L_i + gamma*L_{i+1} with beta+gamma integral, whose
            // model is the projected slice of (beta+gamma)P at the mixed level
            Int q = rat_den(lambda);
            Rat beta = (1 - lambda) * Rat(q), gamma = lambda * Rat(q);
            Rat level = beta * verdict.lo + gamma * verdict.hi;
            Polytope scaled = a.polytope.dilate(Rat(q));
            Polytope model = project_level_set(slice(scaled, a.v, level), a.split);
            Fan fan = normal_fan(model);
            bool match = (fan == chain.slices[i].fan);
            fans.push_back(std::move(fan));
            verdict.samples.push_back(ChamberSample{beta, gamma, level, match});
        }
        verdict.constant = true;
        for (const auto& f : fans) verdict.constant = verdict.constant && (f == fans.front());
        verdict.equals_quotient = true;
        for (const auto& s : verdict.samples) verdict.equals_quotient = verdict.equals_quotient && s.matches_quotient;
        rep.all_pass = rep.all_pass && verdict.constant && verdict.equals_quotient;
        chamber_fans.push_back(fans.front());
        rep.chambers.push_back(std::move(verdict));
    }
    for (int i = 1; i < a.criticality; ++i) {
        bool differs = !(chamber_fans[i - 1] == chamber_fans[i]);
        rep.wall_separates.push_back(differs);
        rep.wall_tags.push_back(chain.walls[i - 1].tag);
        bool expected_differs = chain.walls[i - 1].tag != WallTag::isomorphism;
        rep.all_pass = rep.all_pass && (differs == expected_differs);
    }
    return rep;
}

} // namespace tbw
