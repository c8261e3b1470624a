#include "tbw/oracle.hpp"

#include <algorithm>

namespace tbw {

std::vector<IVec> box_lattice_points(const Polytope& p) {
    if (p.rank() == 0) return {IVec{}};
    int n = p.rank();
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat mn = p.vertices()[0][i], mx = p.vertices()[0][i];
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
    }
    // denominator-cleared integer rows: <u, a> + b >= 0, equations as two rows
    std::vector<std::pair<IVec, Int>> rows;
    for (const auto& f : p.facets()) {
        rows.push_back({iscale(rat_den(f.offset), f.normal), rat_num(f.offset)});
    }
    for (const auto& e : p.span_equations()) {
        rows.push_back({e.normal, e.offset});
        rows.push_back({iscale(Int(-1), e.normal), -e.offset});
    }
    // early rejection: best achievable value of each row over the remaining
    // coordinates of the box
    size_t nrows = rows.size();
    std::vector<std::vector<Int>> maxrest(nrows, std::vector<Int>(n + 1, Int(0)));
    for (size_t r = 0; r < nrows; ++r) {
        for (int k = n - 1; k >= 0; --k) {
            const Int& a = rows[r].first[k];
            Int best = a >= 0 ? a * hi[k] : a * lo[k];
            maxrest[r][k] = maxrest[r][k + 1] + best;
        }
    }
    std::vector<IVec> out;
    IVec pt(n);
    std::vector<std::vector<Int>> partial(nrows, std::vector<Int>(n + 1, Int(0)));
    for (size_t r = 0; r < nrows; ++r) partial[r][0] = rows[r].second;
    auto sweep = [&](auto&& self, int k) -> void {
        if (k == n) {
            for (size_t r = 0; r < nrows; ++r) {
                if (partial[r][n] < 0) return;
            }
            out.push_back(pt);
            return;
        }
        for (Int x = lo[k]; x <= hi[k]; ++x) {
            pt[k] = x;
            bool feasible = true;
            for (size_t r = 0; r < nrows; ++r) {
                partial[r][k + 1] = partial[r][k] + rows[r].first[k] * x;
                if (partial[r][k + 1] + maxrest[r][k + 1] < 0) { feasible = false; break; }
            }
            if (feasible) self(self, k + 1);
        }
    };
    sweep(sweep, 0);
    return out;
}

GradedCountTable graded_section_counts(const Polytope& p, const IVec& v, const Int& m_max) {
    if (m_max < 1) throw input_error("graded_section_counts: m_max must be positive");
    GradedCountTable table;
    table.m_max = m_max;
    for (Int m = 1; m <= m_max; ++m) {
        Polytope mp = p.dilate(Rat(m));
        for (const auto& u : box_lattice_points(mp)) {
            Int level = dot(u, v);
            ++table.counts[{m, level}];
        }
    }
    return table;
}

namespace {

bool representable(const IVec& x, const std::vector<IVec>& gens, const Cone& cone,
                   std::map<IVec, bool>& memo) {
    if (is_zero(x)) return true;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    memo[x] = false; // guards degree-0 generator cycles
    bool ok = false;
    for (const auto& g : gens) {
        IVec y = isub(x, g);
        if (y == x) continue;
        if (!cone.contains(y)) continue;
        if (representable(y, gens, cone, memo)) { ok = true; break; }
    }
    memo[x] = ok;
    return ok;
}

} // namespace

GenerationCheck semigroup_generated_check(const std::vector<IVec>& generators, const Int& target_degree) {
    if (generators.empty()) throw input_error("semigroup_generated_check: no generators");
    int n = static_cast<int>(generators[0].size());
    Cone cone = Cone::from_generators(n, generators);

    bool clipped = false;
    for (const auto& r : cone.rays) {
        if (r.back() == 0) clipped = true;
    }
    Int box = 1;
    for (const auto& g : generators) {
        for (const auto& x : g) {
            Int ax = x < 0 ? Int(-x) : x;
            if (ax > box) box = ax;
        }
    }
    box *= (target_degree + 1);

    std::vector<Halfspace> hs;
    for (const auto& h : cone.halfspaces) hs.push_back(Halfspace{h, Rat(0)});
    std::vector<Equation> eqs_base;
    for (const auto& e : cone.equations) eqs_base.push_back(Equation{e, Int(0)});
    if (clipped) {
        for (int i = 0; i < n - 1; ++i) {
            IVec pos(n, 0), neg(n, 0);
            pos[i] = 1;
            neg[i] = -1;
            hs.push_back(Halfspace{pos, Rat(box)});
            hs.push_back(Halfspace{neg, Rat(box)});
        }
    }

    IVec grade(n, 0);
    grade[n - 1] = 1;
    std::map<IVec, bool> memo;
    for (Int k = 0; k <= target_degree; ++k) {
        auto eqs = eqs_base;
        eqs.push_back(Equation{grade, -k});
        auto level = Polytope::try_from_halfspaces(n, hs, eqs);
        if (!level) continue;
        for (const auto& x : box_lattice_points(*level)) {
            if (is_zero(x)) continue;
            if (!representable(x, generators, cone, memo)) {
                return GenerationCheck{false, x};
            }
        }
    }
    return GenerationCheck{true, {}};
}

WeightModel weight_subalgebra_model(const Polytope& p, const IVec& v, const Rat& tau, const Int& m_max) {
    std::vector<Int> valid;
    for (Int m = 1; m <= m_max; ++m) {
        if (is_integral(Rat(m) * tau)) valid.push_back(m);
    }
    if (valid.empty()) throw input_error("weight_subalgebra_model: no integral level m*tau within m_max");

    LatticeSplit split = lattice_split(v);
    std::vector<QVec> hull_pts;
    Polytope prev, last;
    for (const Int& m : valid) {
        Polytope mp = p.dilate(Rat(m));
        Int level = rat_num(Rat(m) * tau);
        for (const auto& u : box_lattice_points(mp)) {
            if (dot(u, v) == level) {
                hull_pts.push_back(qscale(Rat(1, m), to_qvec(u)));
            }
        }
        if (!hull_pts.empty()) {
            prev = last;
            last = Polytope::from_points(p.rank(), hull_pts);
        }
    }
    if (hull_pts.empty()) throw verification_error("weight_subalgebra_model: no sections found up to m_max");
    WeightModel out;
    out.stabilized = prev.valid() && prev == last;
    out.model = project_level_set(last, split);
    return out;
}

} // namespace tbw
