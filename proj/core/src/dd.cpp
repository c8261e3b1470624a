#include "tbw/dd.hpp"

#include <algorithm>

namespace tbw {

namespace {

struct Ray {
    IVec v;
    std::vector<char> tight; // tight[i] = 1 iff <row_i, v> == 0, over processed rows
};

std::vector<char> tight_set(const IVec& v, const std::vector<IVec>& rows, size_t upto) {
    std::vector<char> t(upto, 0);
    for (size_t i = 0; i < upto; ++i) t[i] = (dot(rows[i], v) == 0) ? 1 : 0;
    return t;
}

bool subset(const std::vector<char>& a, const std::vector<char>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
    }
    return true;
}

} // namespace

DDResult dd_from_halfspaces(int rank, const std::vector<IVec>& halfspaces) {
    std::vector<IVec> lines;
    for (int i = 0; i < rank; ++i) {
        IVec e(rank, 0);
        e[i] = 1;
        lines.push_back(e);
    }
    std::vector<Ray> rays;

    for (size_t k = 0; k < halfspaces.size(); ++k) {
        const IVec& a = halfspaces[k];
        // A line with nonzero pairing absorbs the cut: lineality drops by one.
        size_t cut = lines.size();
        for (size_t i = 0; i < lines.size(); ++i) {
            if (dot(a, lines[i]) != 0) { cut = i; break; }
        }
        if (cut != lines.size()) {
            IVec l0 = lines[cut];
            Int s = dot(a, l0);
            if (s < 0) { l0 = iscale(Int(-1), l0); s = -s; }
            lines.erase(lines.begin() + cut);
            for (auto& l : lines) {
                Int c = dot(a, l);
                if (c != 0) l = primitive(icomb(s, l, -c, l0));
            }
            for (auto& r : rays) {
                Int c = dot(a, r.v);
                if (c != 0) r.v = primitive(icomb(s, r.v, -c, l0));
                r.tight = tight_set(r.v, halfspaces, k + 1);
            }
            Ray nr{primitive(l0), {}};
            nr.tight = tight_set(nr.v, halfspaces, k + 1);
            rays.push_back(nr);
            continue;
        }

        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            Int d = dot(a, rays[i].v);
            if (d > 0) pos.push_back(i);
            else if (d < 0) neg.push_back(i);
        }
        if (neg.empty()) {
            for (auto& r : rays) r.tight = tight_set(r.v, halfspaces, k + 1);
            continue;
        }

        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            Int d = dot(a, rays[i].v);
            if (d >= 0) next.push_back(rays[i]);
        }
        // adjacent (+,-) pairs combine onto the hyperplane
        for (size_t ip : pos) {
            for (size_t in : neg) {
                std::vector<char> common(k, 0);
                bool nonempty_ok = true;
                for (size_t j = 0; j < k; ++j)
                    common[j] = rays[ip].tight[j] && rays[in].tight[j];
                (void)nonempty_ok;
                bool adjacent = true;
                for (size_t other = 0; other < rays.size(); ++other) {
                    if (other == ip || other == in) continue;
                    if (subset(common, rays[other].tight)) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Int dp = dot(a, rays[ip].v);
                Int dn = dot(a, rays[in].v);
                IVec w = primitive(icomb(dp, rays[in].v, -dn, rays[ip].v));
                if (is_zero(w)) continue;
                bool dup = false;
                for (const auto& r : next) {
                    if (r.v == w) { dup = true; break; }
                }
                if (!dup) next.push_back(Ray{w, {}});
            }
        }
        for (auto& r : next) r.tight = tight_set(r.v, halfspaces, k + 1);
        rays = std::move(next);
    }

    DDResult out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), [](const IVec& x, const IVec& y) { return lex_less(x, y); });
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    out.lines = hnf_rows(lines);
    return out;
}

DDResult dd_from_generators(int rank, const std::vector<IVec>& generators,
                            const std::vector<IVec>& lines_in) {
    std::vector<IVec> rows = generators;
    for (const auto& l : lines_in) {
        rows.push_back(l);
        rows.push_back(iscale(Int(-1), l));
    }
    return dd_from_halfspaces(rank, rows);
}

} // namespace tbw
