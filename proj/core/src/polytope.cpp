#include "tbw/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tbw {

namespace {

// Primitive integer generator of the ray through (p, 1).
IVec homogenize_point(const QVec& p) {
    Int mult = 1;
    for (const auto& x : p) mult = lcm(mult, rat_den(x));
    IVec g(p.size() + 1);
    for (size_t i = 0; i < p.size(); ++i) g[i] = rat_num(p[i] * Rat(mult));
    g[p.size()] = mult;
    return primitive(g);
}

// Integer row (q*a, q*b) for the halfspace <u,a> + b >= 0 with b = p/q.
IVec homogenize_halfspace(const IVec& a, const Rat& b) {
    Int q = rat_den(b);
    IVec row(a.size() + 1);
    for (size_t i = 0; i < a.size(); ++i) row[i] = q * a[i];
    row[a.size()] = rat_num(b);
    return primitive(row);
}

} // namespace

Polytope Polytope::from_points(int rank, std::vector<QVec> points) {
    if (points.empty()) throw input_error("canonicalize: no points given");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != rank) throw input_error("canonicalize: point of wrong rank");
    }
    std::sort(points.begin(), points.end(), [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // large clouds: hull incrementally in chunks so the double description
    // only ever sees the surviving vertices plus one chunk
    constexpr size_t kChunk = 48;
    if (points.size() > 2 * kChunk) {
        std::vector<QVec> current(points.begin(), points.begin() + kChunk);
        size_t at = kChunk;
        while (at < points.size()) {
            size_t take = std::min(kChunk, points.size() - at);
            current.insert(current.end(), points.begin() + at, points.begin() + at + take);
            at += take;
            current = from_points(rank, std::move(current)).verts_;
        }
        return from_points(rank, std::move(current));
    }

    Polytope poly;
    poly.rank_ = rank;

    if (rank == 0) {
        poly.dim_ = 0;
        poly.verts_ = {QVec{}};
        return poly;
    }

    std::vector<IVec> gens;
    gens.reserve(points.size());
    for (const auto& p : points) gens.push_back(homogenize_point(p));
    DDResult dual = dd_from_generators(rank + 1, gens);

    // lines of the dual cone are the affine-span equations
    for (const auto& l : dual.lines) {
        IVec normal(l.begin(), l.end() - 1);
        if (is_zero(normal)) throw internal_error("canonicalize: degenerate equation");
        poly.span_.push_back(Equation{normal, l.back()});
    }
    poly.dim_ = rank - static_cast<int>(poly.span_.size());

    // Facet representative: unique translate (mod equations) whose normal is
    // orthogonal to every equation normal, scaled so the normal is primitive.
    QMat eq_rows;
    QMat gram;
    for (const auto& e : poly.span_) eq_rows.push_back(to_qvec(e.normal));
    for (size_t i = 0; i < eq_rows.size(); ++i) {
        QVec row(eq_rows.size());
        for (size_t j = 0; j < eq_rows.size(); ++j) row[j] = dot(eq_rows[i], eq_rows[j]);
        gram.push_back(row);
    }
    for (const auto& ray : dual.rays) {
        QVec a = to_qvec(IVec(ray.begin(), ray.end() - 1));
        Rat b(ray.back());
        if (!eq_rows.empty()) {
            QVec rhs(eq_rows.size());
            for (size_t j = 0; j < eq_rows.size(); ++j) rhs[j] = dot(a, eq_rows[j]);
            QVec t = solve_square(gram, rhs);
            for (size_t j = 0; j < eq_rows.size(); ++j) {
                a = qsub(a, qscale(t[j], eq_rows[j]));
                b -= t[j] * Rat(poly.span_[j].offset);
            }
        }
        if (is_zero(a)) {
            // the trivial-inequality class; extreme only for points, which
            // have no facets inside their span
            continue;
        }
        IVec an = primitive_direction(a);
        // rescale offset to the primitive normal
        Rat scale;
        for (size_t i = 0; i < a.size(); ++i) {
            if (an[i] != 0) { scale = a[i] / Rat(an[i]); break; }
        }
        poly.facets_.push_back(Halfspace{an, b / scale});
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Halfspace& x, const Halfspace& y) {
        if (x.normal != y.normal) return lex_less(x.normal, y.normal);
        return x.offset < y.offset;
    });

    // extreme points: tight facet normals plus equations must span rank
    for (const auto& p : points) {
        IMat tight;
        for (const auto& f : poly.facets_) {
            if (dot(p, f.normal) + f.offset == 0) tight.push_back(f.normal);
        }
        for (const auto& e : poly.span_) tight.push_back(e.normal);
        if (rank_of(tight) == rank) poly.verts_.push_back(p);
    }
    if (poly.verts_.empty()) throw internal_error("canonicalize: no extreme points");
    return poly;
}

Polytope Polytope::from_lattice_points(int rank, const std::vector<IVec>& points) {
    std::vector<QVec> qpts;
    qpts.reserve(points.size());
    for (const auto& p : points) qpts.push_back(to_qvec(p));
    return from_points(rank, std::move(qpts));
}

std::optional<Polytope> Polytope::try_from_halfspaces(int rank,
                                                      const std::vector<Halfspace>& halfspaces,
                                                      const std::vector<Equation>& equations) {
    if (rank == 0) {
        // only the trivial polytope lives in rank 0
        Polytope poly;
        poly.rank_ = 0;
        poly.dim_ = 0;
        poly.verts_ = {QVec{}};
        return poly;
    }
    if (halfspaces.empty() && equations.empty()) throw input_error("canonicalize: no constraints given");

    std::vector<IVec> rows;
    for (const auto& h : halfspaces) rows.push_back(homogenize_halfspace(h.normal, h.offset));
    for (const auto& e : equations) {
        IVec row = homogenize_halfspace(e.normal, Rat(e.offset));
        rows.push_back(row);
        rows.push_back(iscale(Int(-1), row));
    }
    IVec tpos(rank + 1, 0);
    tpos[rank] = 1;
    rows.push_back(tpos);

    DDResult res = dd_from_halfspaces(rank + 1, rows);
    std::vector<QVec> verts;
    bool recession = !res.lines.empty();
    for (const auto& r : res.rays) {
        if (r.back() == 0) {
            recession = true;
            continue;
        }
        QVec p(rank);
        Rat t(r.back());
        for (int i = 0; i < rank; ++i) p[i] = Rat(r[i]) / t;
        verts.push_back(std::move(p));
    }
    if (verts.empty()) return std::nullopt;
    if (recession) throw input_error("canonicalize: unbounded region");
    return from_points(rank, std::move(verts));
}

Polytope Polytope::from_halfspaces(int rank, const std::vector<Halfspace>& halfspaces,
                                   const std::vector<Equation>& equations) {
    auto poly = try_from_halfspaces(rank, halfspaces, equations);
    if (!poly) throw input_error("canonicalize: empty region");
    return *poly;
}

bool Polytope::is_lattice() const {
    for (const auto& v : verts_) {
        if (!is_integral(v)) return false;
    }
    return true;
}

bool Polytope::contains(const QVec& p) const {
    for (const auto& e : span_) {
        if (dot(p, e.normal) + Rat(e.offset) != 0) return false;
    }
    for (const auto& f : facets_) {
        if (dot(p, f.normal) + f.offset < 0) return false;
    }
    return true;
}

bool Polytope::contains(const IVec& p) const { return contains(to_qvec(p)); }

Polytope Polytope::dilate(const Rat& m) const {
    if (m <= 0) throw input_error("dilate: factor must be positive");
    std::vector<QVec> pts;
    pts.reserve(verts_.size());
    for (const auto& v : verts_) pts.push_back(qscale(m, v));
    return from_points(rank_, std::move(pts));
}

Polytope Polytope::translate(const QVec& t) const {
    std::vector<QVec> pts;
    pts.reserve(verts_.size());
    for (const auto& v : verts_) pts.push_back(qadd(v, t));
    return from_points(rank_, std::move(pts));
}

std::vector<IVec> lattice_points(const Polytope& p) {
    if (!p.valid()) throw internal_error("lattice_points: invalid polytope");
    if (p.rank() == 0) return {IVec{}};

    int n = p.rank();
    // integer rows (a, b): <u, a> + b >= 0
    std::vector<IVec> base;
    for (const auto& f : p.facets()) {
        IVec row(f.normal);
        Int q = rat_den(f.offset);
        for (auto& x : row) x *= q;
        row.push_back(rat_num(f.offset));
        base.push_back(row);
    }
    for (const auto& e : p.span_equations()) {
        IVec row(e.normal);
        row.push_back(e.offset);
        base.push_back(row);
        base.push_back(iscale(Int(-1), row));
    }

    // systems[k]: rows over coordinates x_0..x_{k-1} (plus constant term),
    // obtained by Fourier-Motzkin elimination of trailing coordinates. Rows
    // that are slack on every projected vertex are redundant for describing
    // the projection and get dropped, which keeps the row count at the facet
    // count of each projection instead of growing quadratically.
    std::vector<std::vector<IVec>> systems(n + 1);
    systems[n] = base;
    for (int k = n; k >= 1; --k) {
        std::vector<IVec> reduced;
        std::vector<IVec> pos, neg;
        for (const auto& row : systems[k]) {
            const Int& c = row[k - 1];
            IVec short_row;
            for (int j = 0; j < k - 1; ++j) short_row.push_back(row[j]);
            short_row.push_back(row[k]); // constant term
            if (c == 0) reduced.push_back(primitive(short_row));
            else if (c > 0) pos.push_back(row);
            else neg.push_back(row);
        }
        for (const auto& rp : pos) {
            for (const auto& rn : neg) {
                IVec comb(k, Int(0));
                const Int cp = rp[k - 1];
                const Int cn = -rn[k - 1];
                for (int j = 0; j < k - 1; ++j) comb[j] = cn * rp[j] + cp * rn[j];
                comb[k - 1] = cn * rp[k] + cp * rn[k];
                reduced.push_back(primitive(comb));
            }
        }
        std::sort(reduced.begin(), reduced.end(),
                  [](const IVec& a, const IVec& b) { return lex_less(a, b); });
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        std::vector<IVec> supporting;
        for (const auto& row : reduced) {
            bool tight_somewhere = false;
            for (const auto& v : p.vertices()) {
                Rat val(row[k - 1]);
                for (int j = 0; j < k - 1; ++j) val += v[j] * Rat(row[j]);
                if (val == 0) { tight_somewhere = true; break; }
            }
            if (tight_somewhere) supporting.push_back(row);
        }
        systems[k - 1] = std::move(supporting);
    }

    std::vector<IVec> out;
    IVec point(n, Int(0));
    // choose x_k given the prefix, using the system over x_0..x_k
    auto recurse = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back(point);
            return;
        }
        bool has_lo = false, has_hi = false;
        Int lo = 0, hi = 0;
        for (const auto& row : systems[k + 1]) {
            const Int& c = row[k];
            Int rest = row[k + 1];
            for (int j = 0; j < k; ++j) rest += row[j] * point[j];
            if (c == 0) {
                if (rest < 0) return; // infeasible prefix carried through FM
                continue;
            }
            // c*x + rest >= 0
            if (c > 0) {
                Int bound = rat_ceil(Rat(-rest, c));
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                Int bound = rat_floor(Rat(rest, -c));
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        if (!has_lo || !has_hi) throw internal_error("lattice_points: unbounded direction");
        for (Int x = lo; x <= hi; ++x) {
            point[k] = x;
            self(self, k + 1);
        }
        point[k] = 0;
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Face> faces(const Polytope& p) {
    int nv = static_cast<int>(p.vertices().size());
    std::set<std::vector<int>> sets;
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    sets.insert(all);
    sets.insert({});
    for (const auto& f : p.facets()) {
        std::vector<int> s;
        for (int i = 0; i < nv; ++i) {
            if (dot(p.vertices()[i], f.normal) + f.offset == 0) s.push_back(i);
        }
        sets.insert(s);
    }
    // close under pairwise intersection
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i) {
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::back_inserter(inter));
                if (sets.insert(inter).second) grew = true;
            }
        }
    }
    std::vector<Face> out;
    for (const auto& s : sets) {
        if (s.empty()) {
            std::vector<int> all_facets(p.facets().size());
            for (size_t i = 0; i < p.facets().size(); ++i) all_facets[i] = static_cast<int>(i);
            out.push_back(Face{{}, -1, all_facets});
            continue;
        }
        QMat dirs;
        for (size_t i = 1; i < s.size(); ++i) dirs.push_back(qsub(p.vertices()[s[i]], p.vertices()[s[0]]));
        std::vector<int> active;
        for (size_t fi = 0; fi < p.facets().size(); ++fi) {
            bool on = true;
            for (int vi : s) {
                if (dot(p.vertices()[vi], p.facets()[fi].normal) + p.facets()[fi].offset != 0) {
                    on = false;
                    break;
                }
            }
            if (on) active.push_back(static_cast<int>(fi));
        }
        out.push_back(Face{s, dirs.empty() ? 0 : rank_of(dirs), active});
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    return out;
}

std::vector<Int> f_vector(const Polytope& p) {
    std::vector<Int> f(p.dim() + 1, Int(0));
    for (const auto& face : faces(p)) {
        if (face.dim >= 0) ++f[face.dim];
    }
    return f;
}

Rat min_pairing(const Polytope& p, const IVec& v) {
    Rat best = dot(p.vertices()[0], v);
    for (const auto& w : p.vertices()) best = std::min(best, dot(w, v));
    return best;
}

Rat max_pairing(const Polytope& p, const IVec& v) {
    Rat best = dot(p.vertices()[0], v);
    for (const auto& w : p.vertices()) best = std::max(best, dot(w, v));
    return best;
}

Polytope slice(const Polytope& p, const IVec& v, const Rat& level) {
    if (is_zero(v)) throw input_error("slice: zero direction");
    if (level < min_pairing(p, v) || level > max_pairing(p, v)) {
        throw input_error("slice: level outside the range of the direction on the polytope");
    }
    std::vector<Equation> eqs = p.span_equations();
    IVec row = homogenize_halfspace(v, -level);
    eqs.push_back(Equation{IVec(row.begin(), row.end() - 1), row.back()});
    return Polytope::from_halfspaces(p.rank(), p.facets(), eqs);
}

std::optional<Polytope> try_slab(const Polytope& p, const IVec& v, const Rat& lo, const Rat& hi) {
    std::vector<Halfspace> hs = p.facets();
    hs.push_back(Halfspace{v, -lo});
    hs.push_back(Halfspace{iscale(Int(-1), v), hi});
    return Polytope::try_from_halfspaces(p.rank(), hs, p.span_equations());
}

bool equal_up_to_translation(const Polytope& a, const Polytope& b) {
    if (a.rank() != b.rank() || a.dim() != b.dim()) return false;
    if (a.vertices().size() != b.vertices().size()) return false;
    QVec t = qsub(b.vertices()[0], a.vertices()[0]);
    for (size_t i = 0; i < a.vertices().size(); ++i) {
        if (qadd(a.vertices()[i], t) != b.vertices()[i]) return false;
    }
    return true;
}

} // namespace tbw
