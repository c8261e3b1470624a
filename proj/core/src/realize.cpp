#include "tbw/realize.hpp"

#include <algorithm>
#include <map>

namespace tbw {

namespace {

// facet offsets of P_- keyed by primitive ray
std::map<IVec, Rat> facet_offsets(const Polytope& p) {
    std::map<IVec, Rat> out;
    for (const auto& f : p.facets()) out[f.normal] = f.offset;
    return out;
}

std::map<IVec, Int> coeff_map(const MdpInput& input) {
    std::map<IVec, Int> out;
    for (const auto& [ray, b] : input.plus_coeffs) {
        IVec r = primitive(ray);
        if (out.count(r)) throw input_error("validate_mdp: duplicate ray coefficient");
        out[r] = b;
    }
    return out;
}

} // namespace

MdpValidation validate_mdp(const MdpInput& input, bool with_certificate) {
    MdpValidation val;
    if (!input.p_minus.valid() || !input.p_minus.full_dimensional()) {
        val.reasons.push_back("the ample model must be a full-dimensional polytope");
        return val;
    }
    if (!input.p_minus.is_lattice()) {
        val.reasons.push_back("the ample model must have integral vertices");
        return val;
    }
    auto offsets = facet_offsets(input.p_minus);
    std::map<IVec, Int> coeffs;
    try {
        coeffs = coeff_map(input);
    } catch (const input_error& e) {
        val.reasons.push_back(e.what());
        return val;
    }
    for (const auto& [ray, off] : offsets) {
        if (!coeffs.count(ray)) {
            val.reasons.push_back("missing coefficient for a ray of the normal fan");
            return val;
        }
    }
    for (const auto& [ray, b] : coeffs) {
        if (!offsets.count(ray)) {
            val.reasons.push_back("coefficient given for a vector that is not a ray of the normal fan");
            return val;
        }
    }

    std::vector<Halfspace> hs;
    for (const auto& [ray, b] : coeffs) hs.push_back(Halfspace{ray, Rat(b)});
    std::optional<Polytope> p_plus;
    try {
        p_plus = Polytope::try_from_halfspaces(input.p_minus.rank(), hs);
    } catch (const input_error&) {
        val.reasons.push_back("the second divisor has an unbounded polytope");
        return val;
    }
    if (!p_plus) {
        val.reasons.push_back("the second divisor has an empty polytope");
        return val;
    }
    val.p_plus = *p_plus;
    if (!p_plus->full_dimensional()) {
        val.reasons.push_back("the second divisor's polytope is not full-dimensional");
        return val;
    }
    Fan sigma_minus = normal_fan(input.p_minus);
    Fan sigma_plus = normal_fan(*p_plus);
    val.rays_match = (ray_set(sigma_minus) == ray_set(sigma_plus));
    if (!val.rays_match) {
        val.reasons.push_back("the two normal fans do not share their rays; the induced map is not small");
        return val;
    }

    // finite generation of the two-parameter section ring, certified on the
    // slab cone via its effective generation degree
    if (with_certificate) {
        std::vector<Halfspace> slab;
        int n = input.p_minus.rank();
        for (const auto& [ray, a] : offsets) {
            IVec normal = ray;
            normal.push_back(rat_num(Rat(coeffs[ray]) - a)); // offsets are integral here
            slab.push_back(Halfspace{normal, a});
        }
        IVec up(n + 1, 0), down(n + 1, 0);
        up[n] = 1;
        down[n] = -1;
        slab.push_back(Halfspace{up, Rat(0)});
        slab.push_back(Halfspace{down, Rat(1)});
        Polytope q = Polytope::from_halfspaces(n + 1, slab);
        GenerationResult gen = generation_degree(q);
        GordanCertificate cert;
        cert.basis = gen.basis; // height-one level of the generating dilate
        cert.generation_degree = gen.dprime;
        cert.bound = 2 * gen.dprime;
        val.certificate = std::move(cert);
    }
    val.valid = true;
    return val;
}

RealizedBordism realize(const MdpInput& input, const Int& alpha_minus, const Int& alpha_plus) {
    if (alpha_minus <= 0 || alpha_plus <= 0) {
        throw precondition_error("realize: the grading pair must be positive");
    }
    if (gcd(alpha_minus, alpha_plus) != 1) {
        throw precondition_error("realize: the grading pair must be coprime");
    }
    MdpValidation val = validate_mdp(input, false);
    if (!val.valid) {
        throw precondition_error("realize: invalid divisor pair: " +
                                 (val.reasons.empty() ? std::string("unknown") : val.reasons.front()));
    }

    int n = input.p_minus.rank();
    auto offsets = facet_offsets(input.p_minus);
    auto coeffs = coeff_map(input);
    // slab of the height-graded ring: at height t the slice is the divisor
    // polytope of alpha_plus*(1-t)*L_- + alpha_minus*t*L_+
    std::vector<Halfspace> slab;
    for (const auto& [ray, a] : offsets) {
        IVec normal = ray;
        Rat tcoeff = Rat(alpha_minus * coeffs[ray]) - Rat(alpha_plus) * a;
        normal.push_back(rat_num(tcoeff));
        slab.push_back(Halfspace{normal, Rat(alpha_plus) * a});
    }
    IVec up(n + 1, 0), down(n + 1, 0);
    up[n] = 1;
    down[n] = -1;
    slab.push_back(Halfspace{up, Rat(0)});
    slab.push_back(Halfspace{down, Rat(1)});

    RealizedBordism rb;
    rb.q = Polytope::from_halfspaces(n + 1, slab);
    rb.v = IVec(n + 1, 0);
    rb.v[n] = 1;
    rb.input = input;
    rb.alpha_minus = alpha_minus;
    rb.alpha_plus = alpha_plus;

    // the end slices must reproduce the scaled input pair exactly
    Polytope bottom = slice(rb.q, rb.v, Rat(0));
    Polytope top = slice(rb.q, rb.v, Rat(1));
    LatticeSplit split = lattice_split(rb.v);
    Polytope bottom_model = project_level_set(bottom, split);
    Polytope top_model = project_level_set(top, split);
    if (!(bottom_model == input.p_minus.dilate(Rat(alpha_plus)))) {
        throw internal_error("realize: bottom slice does not reproduce the ample model");
    }
    if (!(top_model == val.p_plus->dilate(Rat(alpha_minus)))) {
        throw internal_error("realize: top slice does not reproduce the second model");
    }

    // hull of the end slices versus the slab: equality means every section of
    // the slab ring already comes from the ends
    std::vector<QVec> hull_pts;
    for (const auto& w : bottom.vertices()) hull_pts.push_back(w);
    for (const auto& w : top.vertices()) hull_pts.push_back(w);
    Polytope hull = Polytope::from_points(n + 1, hull_pts);
    rb.hull_equals_slab = (hull == rb.q);
    return rb;
}

RealizationReport verify_realization(const RealizedBordism& rb, const Int& veronese_degree) {
    RealizationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.verdicts.push_back(RealizationVerdict{name, pass, detail});
    };

    MdpValidation val = validate_mdp(rb.input, false);
    add("input pair valid", val.valid, val.reasons.empty() ? "" : val.reasons.front());

    ActionAnalysis an = analyze_action(rb.q, rb.v);
    LatticeSplit split = lattice_split(rb.v);

    // sink identification is exact up to the recorded scaling
    bool sink_exact = false, source_exact = false;
    {
        Polytope bottom = project_level_set(slice(an.polytope, rb.v, Rat(0)), split);
        sink_exact = (bottom == rb.input.p_minus.dilate(Rat(rb.alpha_plus)));
        Polytope top = project_level_set(slice(an.polytope, rb.v, an.bandwidth), split);
        if (val.p_plus) source_exact = (top == val.p_plus->dilate(Rat(rb.alpha_minus)));
    }
    add("sink slice is the scaled ample model", sink_exact);
    add("source slice is the scaled second model", source_exact);

    Polytope sink_model = project_level_set(an.component_polytope(an.sink), split);
    Polytope source_model = project_level_set(an.component_polytope(an.source), split);
    add("sink normally equivalent to the ample model", models_equivalent(sink_model, rb.input.p_minus));
    bool source_ok = val.p_plus && models_equivalent(source_model, *val.p_plus);
    add("source normally equivalent to the second model", source_ok);

    add("b-type", an.b_type);
    std::string bordism_detail;
    if (!an.bordism) {
        if (!an.b_type_sink_ok) bordism_detail += "sink is not the lowest quotient";
        if (!an.b_type_source_ok) {
            if (!bordism_detail.empty()) bordism_detail += ", ";
            bordism_detail += "source is not the highest quotient";
        }
        for (size_t i = 0; i < an.admissible.size(); ++i) {
            if (an.admissible[i]) continue;
            for (int f : an.offending_facets[i]) {
                if (!bordism_detail.empty()) bordism_detail += ", ";
                bordism_detail += "interval " + std::to_string(i) + " facet " + std::to_string(f);
            }
        }
    }
    add("bordism", an.bordism, bordism_detail);
    add("equalized at the extremes", an.equalized_sink && an.equalized_source);

    rep.chain = quotient_chain(an);
    bool ends_match = false, rays_equal = false;
    if (val.p_plus) {
        ends_match = (rep.chain.slices.front().fan == normal_fan(rb.input.p_minus)) &&
                     (rep.chain.slices.back().fan == normal_fan(*val.p_plus));
        rays_equal = ray_set(rep.chain.slices.front().fan) == ray_set(rep.chain.slices.back().fan);
    }
    add("chain ends model the input pair", ends_match);
    add("end models share their rays", rays_equal);

    // graded count consistency: slab slices against divisor polytopes
    {
        bool counts_ok = true;
        auto offsets = facet_offsets(rb.input.p_minus);
        auto coeffs = coeff_map(rb.input);
        for (Int m = 1; m <= veronese_degree && counts_ok; ++m) {
            Polytope mq = an.polytope.dilate(Rat(m));
            for (Int t = 0; t <= m && counts_ok; ++t) {
                Polytope level = project_level_set(slice(mq, rb.v, Rat(t)), split);
                Int got(lattice_points(level).size());
                // divisor polytope of m_- L_- + m_+ L_+ with the matching grading
                Int m_minus = rb.alpha_plus * (m - t);
                Int m_plus = rb.alpha_minus * t;
                std::vector<Halfspace> hs;
                for (const auto& [ray, a] : offsets) {
                    hs.push_back(Halfspace{ray, Rat(m_minus) * a + Rat(m_plus * coeffs[ray])});
                }
                auto dp = Polytope::try_from_halfspaces(rb.input.p_minus.rank(), hs);
                Int expected = dp ? Int(box_lattice_points(*dp).size()) : Int(0);
                counts_ok = (expected == got);
            }
        }
        add("graded counts match the divisor polytopes", counts_ok);
    }

    rep.all_pass = true;
    for (const auto& v : rep.verdicts) rep.all_pass = rep.all_pass && v.pass;
    return rep;
}

CompareReport compare_realizations(const MdpInput& input, const Int& am1, const Int& ap1,
                                   const Int& am2, const Int& ap2) {
    RealizedBordism r1 = realize(input, am1, ap1);
    RealizedBordism r2 = realize(input, am2, ap2);
    QuotientChain c1 = quotient_chain(analyze_action(r1.q, r1.v));
    QuotientChain c2 = quotient_chain(analyze_action(r2.q, r2.v));
    CompareReport rep;
    rep.lengths_match = (c1.slices.size() == c2.slices.size());
    rep.all_pass = rep.lengths_match;
    if (rep.lengths_match) {
        for (size_t i = 0; i < c1.slices.size(); ++i) {
            bool m = (c1.slices[i].fan == c2.slices[i].fan);
            rep.models_match.push_back(m);
            rep.all_pass = rep.all_pass && m;
        }
        for (size_t i = 0; i < c1.walls.size(); ++i) {
            bool t = (c1.walls[i].tag == c2.walls[i].tag);
            rep.tags_match.push_back(t);
            rep.all_pass = rep.all_pass && t;
        }
    }
    return rep;
}

} // namespace tbw
