#include "tbw/cone.hpp"

#include <algorithm>

namespace tbw {

namespace {

Cone assemble(int rank, DDResult primal, DDResult dual) {
    Cone c;
    c.rank = rank;
    c.rays = std::move(primal.rays);
    c.lines = std::move(primal.lines);
    c.halfspaces = std::move(dual.rays);
    c.equations = std::move(dual.lines);
    c.pointed = c.lines.empty();
    return c;
}

} // namespace

Cone Cone::from_generators(int rank, const std::vector<IVec>& gens) {
    DDResult dual = dd_from_generators(rank, gens);
    std::vector<IVec> rows = dual.rays;
    for (const auto& l : dual.lines) {
        rows.push_back(l);
        rows.push_back(iscale(Int(-1), l));
    }
    DDResult primal = dd_from_halfspaces(rank, rows);
    return assemble(rank, std::move(primal), std::move(dual));
}

Cone Cone::from_halfspaces(int rank, const std::vector<IVec>& halfspaces) {
    DDResult primal = dd_from_halfspaces(rank, halfspaces);
    std::vector<IVec> gens = primal.rays;
    DDResult dual = dd_from_generators(rank, primal.rays, primal.lines);
    return assemble(rank, std::move(primal), std::move(dual));
}

bool Cone::contains(const IVec& x) const {
    for (const auto& e : equations) {
        if (dot(e, x) != 0) return false;
    }
    for (const auto& h : halfspaces) {
        if (dot(h, x) < 0) return false;
    }
    return true;
}

bool Cone::contains(const QVec& x) const {
    for (const auto& e : equations) {
        if (dot(x, e) != 0) return false;
    }
    for (const auto& h : halfspaces) {
        if (dot(x, h) < 0) return false;
    }
    return true;
}

Cone cone_over(const Polytope& p) {
    std::vector<IVec> gens;
    for (const auto& v : p.vertices()) {
        Int mult = 1;
        for (const auto& x : v) mult = lcm(mult, rat_den(x));
        IVec g(v.size() + 1);
        for (size_t i = 0; i < v.size(); ++i) g[i] = rat_num(v[i] * Rat(mult));
        g[v.size()] = mult;
        gens.push_back(primitive(g));
    }
    return Cone::from_generators(p.rank() + 1, gens);
}

namespace {

// A grading strictly positive on the cone, chosen to keep the saturation
// bound small: coordinate functionals when one works, else the sum of the
// dual extreme rays.
IVec choose_grading(const Cone& c) {
    std::vector<IVec> candidates;
    for (int i = 0; i < c.rank; ++i) {
        IVec e(c.rank, 0);
        e[i] = 1;
        candidates.push_back(e);
        e[i] = -1;
        candidates.push_back(e);
    }
    IVec hsum(c.rank, 0);
    for (const auto& h : c.halfspaces) hsum = iadd(hsum, h);
    candidates.push_back(hsum);

    IVec best;
    Int best_total = -1;
    for (const auto& w : candidates) {
        Int total = 0;
        bool ok = true;
        for (const auto& g : c.rays) {
            Int d = dot(w, g);
            if (d <= 0) { ok = false; break; }
            total += d;
        }
        if (!ok || c.rays.empty()) continue;
        if (best_total < 0 || total < best_total) {
            best_total = total;
            best = w;
        }
    }
    if (best_total < 0) throw internal_error("hilbert_basis: no positive grading found");
    return best;
}

} // namespace

std::vector<IVec> hilbert_basis(const Cone& c) {
    if (!c.pointed) throw precondition_error("hilbert_basis: cone is not pointed");
    if (c.rays.empty()) return {};

    IVec w = choose_grading(c);
    Int dmax = 0;
    for (const auto& g : c.rays) dmax += dot(w, g);

    std::vector<Halfspace> level_hs;
    for (const auto& h : c.halfspaces) level_hs.push_back(Halfspace{h, Rat(0)});
    std::vector<Equation> level_eqs;
    for (const auto& e : c.equations) level_eqs.push_back(Equation{e, Int(0)});

    std::vector<IVec> basis;
    for (Int d = 1; d <= dmax; ++d) {
        auto eqs = level_eqs;
        eqs.push_back(Equation{w, -d});
        auto level = Polytope::try_from_halfspaces(c.rank, level_hs, eqs);
        if (!level) continue;
        for (const auto& x : lattice_points(*level)) {
            bool reducible = false;
            for (const auto& b : basis) {
                if (c.contains(isub(x, b))) { reducible = true; break; }
            }
            if (!reducible) basis.push_back(x);
        }
    }
    std::sort(basis.begin(), basis.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return basis;
}

GenerationResult generation_degree(const Polytope& p) {
    Int denom = 1;
    for (const auto& v : p.vertices()) {
        for (const auto& x : v) denom = lcm(denom, rat_den(x));
    }
    Int cap = denom * std::max(1, p.dim() - 1);
    for (Int d = 1; d <= cap; ++d) {
        Polytope dp = p.dilate(Rat(d));
        // generation in height one forces the dilate to be a lattice polytope:
        // otherwise sums of height-one points stay inside the hull of the
        // lattice points, which misses the fractional vertices
        if (!dp.is_lattice()) continue;
        int k = dp.dim();
        auto pts1 = lattice_points(dp);
        // level sets of a lattice polytope add once the height reaches dim-1,
        // so only the low heights need an explicit decomposition check
        bool ok = true;
        // integer membership rows for the dilates: q*<u,a> + h*q*b >= 0
        std::vector<std::pair<IVec, Int>> rows; // (q*a, q*b) for dp
        for (const auto& f : dp.facets()) {
            Int q = rat_den(f.offset);
            rows.push_back({iscale(q, f.normal), rat_num(f.offset)});
        }
        std::vector<std::pair<IVec, Int>> eqrows;
        for (const auto& e : dp.span_equations()) eqrows.push_back({e.normal, e.offset});
        auto in_dilate = [&](const IVec& x, const Int& h) {
            for (const auto& [a, b] : eqrows) {
                if (dot(a, x) + h * b != 0) return false;
            }
            for (const auto& [a, b] : rows) {
                if (dot(a, x) + h * b < 0) return false;
            }
            return true;
        };
        for (int h = 2; h <= k - 1 && ok; ++h) {
            Polytope hp = dp.dilate(Rat(h));
            for (const auto& u : lattice_points(hp)) {
                bool split = false;
                for (const auto& a : pts1) {
                    if (in_dilate(isub(u, a), Int(h - 1))) { split = true; break; }
                }
                if (!split) { ok = false; break; }
            }
        }
        if (!ok) continue;
        GenerationResult res;
        res.dprime = d;
        for (const auto& u : pts1) {
            IVec lifted = u;
            lifted.push_back(1);
            res.degree_one_generators.push_back(lifted);
        }
        // generated in height one, so the Hilbert basis of the cone over the
        // dilate is exactly the height-one level
        res.basis = res.degree_one_generators;
        return res;
    }
    throw internal_error("generation_degree: bound exceeded");
}

} // namespace tbw
