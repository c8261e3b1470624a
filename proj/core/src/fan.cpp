#include "tbw/fan.hpp"

#include <algorithm>

namespace tbw {

Polytope span_chart(const Polytope& p) {
    if (p.full_dimensional()) return p;
    IMat eq_normals;
    for (const auto& e : p.span_equations()) eq_normals.push_back(e.normal);
    IMat basis = integer_kernel(eq_normals); // saturated direction lattice
    if (static_cast<int>(basis.size()) != p.dim()) throw internal_error("span_chart: basis rank mismatch");
    const QVec& base = p.vertices().front(); // lex-min vertex
    // coordinates of (v - base) in the basis
    std::vector<QVec> pts;
    for (const auto& v : p.vertices()) {
        QVec d = qsub(v, base);
        if (basis.empty()) {
            pts.push_back(QVec{});
            continue;
        }
        QMat sys; // solve basis^T c = d by least-structure: stack equations
        // Use Gram trick: (B B^T) c = B d, B has full row rank.
        QMat gram;
        QVec rhs(basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            QVec row(basis.size());
            for (size_t j = 0; j < basis.size(); ++j) row[j] = Rat(dot(basis[i], basis[j]));
            gram.push_back(row);
            rhs[i] = dot(d, basis[i]);
        }
        (void)sys;
        pts.push_back(solve_square(gram, rhs));
    }
    return Polytope::from_points(p.dim(), std::move(pts));
}

Fan normal_fan(const Polytope& p) {
    if (!p.valid()) throw internal_error("normal_fan: invalid polytope");
    if (!p.full_dimensional()) return normal_fan(span_chart(p));

    Fan fan;
    fan.rank = p.rank();
    fan.complete = true;
    for (const auto& f : p.facets()) fan.rays.push_back(f.normal); // already primitive + sorted
    for (const auto& v : p.vertices()) {
        std::vector<int> cone;
        for (size_t i = 0; i < p.facets().size(); ++i) {
            if (dot(v, p.facets()[i].normal) + p.facets()[i].offset == 0) cone.push_back(static_cast<int>(i));
        }
        fan.max_cones.push_back(cone);
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    return fan;
}

bool normally_equivalent(const Polytope& a, const Polytope& b) {
    if (a.rank() != b.rank()) throw input_error("normally_equivalent: rank mismatch");
    if (!a.full_dimensional() || !b.full_dimensional()) {
        throw precondition_error("normally_equivalent: polytopes must be full-dimensional");
    }
    return normal_fan(a) == normal_fan(b);
}

bool models_equivalent(const Polytope& a, const Polytope& b) {
    if (a.rank() != b.rank()) throw input_error("models_equivalent: rank mismatch");
    if (a.dim() != b.dim()) return false;
    if (a.dim() == 0) return true;
    if (a.full_dimensional()) return normal_fan(a) == normal_fan(b);
    // equal lower dimensions: spans must be parallel for the charts to align
    IMat ea, eb;
    for (const auto& e : a.span_equations()) ea.push_back(e.normal);
    for (const auto& e : b.span_equations()) eb.push_back(e.normal);
    if (hnf_rows(ea) != hnf_rows(eb)) return false;
    return normal_fan(a) == normal_fan(b);
}

std::vector<IVec> ray_set(const Fan& f) { return f.rays; }

bool fan_wall_check(const Fan& f) {
    if (f.rank == 0) return f.max_cones.size() == 1;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
        auto gens = f.cone_rays(static_cast<int>(c));
        DDResult dual = dd_from_generators(f.rank, gens);
        if (!dual.lines.empty()) return false; // maximal cones must be full-dimensional
        for (const auto& h : dual.rays) {
            // rays of this cone lying on the wall {h = 0}
            std::vector<int> wall;
            for (int ri : f.max_cones[c]) {
                if (dot(h, f.rays[ri]) == 0) wall.push_back(ri);
            }
            int shared = 0;
            for (size_t c2 = 0; c2 < f.max_cones.size(); ++c2) {
                if (c2 == c) continue;
                bool contains_wall = std::includes(f.max_cones[c2].begin(), f.max_cones[c2].end(),
                                                   wall.begin(), wall.end());
                if (contains_wall) ++shared;
            }
            if (shared != 1) return false;
        }
    }
    return true;
}

bool fan_refines(const Fan& fine, const Fan& coarse) {
    if (fine.rank != coarse.rank) throw input_error("fan_refines: rank mismatch");
    // halfspace forms of the coarse cones
    std::vector<std::vector<IVec>> hforms;
    for (size_t c = 0; c < coarse.max_cones.size(); ++c) {
        DDResult dual = dd_from_generators(coarse.rank, coarse.cone_rays(static_cast<int>(c)));
        std::vector<IVec> rows = dual.rays;
        for (const auto& l : dual.lines) {
            rows.push_back(l);
            rows.push_back(iscale(Int(-1), l));
        }
        hforms.push_back(rows);
    }
    for (size_t f = 0; f < fine.max_cones.size(); ++f) {
        auto gens = fine.cone_rays(static_cast<int>(f));
        bool inside_some = false;
        for (const auto& rows : hforms) {
            bool ok = true;
            for (const auto& g : gens) {
                for (const auto& row : rows) {
                    if (dot(row, g) < 0) { ok = false; break; }
                }
                if (!ok) break;
            }
            if (ok) { inside_some = true; break; }
        }
        if (!inside_some) return false;
    }
    return true;
}

} // namespace tbw
