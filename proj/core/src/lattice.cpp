#include "tbw/lattice.hpp"

namespace tbw {

LatticeSplit lattice_split(const IVec& v) {
    int n = static_cast<int>(v.size());
    if (n == 0 || is_zero(v)) throw input_error("lattice_split: zero direction");
    if (!is_primitive(v)) throw input_error("lattice_split: direction is imprimitive");

    // Column operations reducing v to e_n, accumulated into U, so v * U = e_n;
    // then T = U^{-1} is unimodular with last row v.
    IVec cur = v;
    IMat u(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    auto colop = [&](int a, int b, const Int& p, const Int& q, const Int& r, const Int& s) {
        // (col_a, col_b) <- (p*col_a + q*col_b, r*col_a + s*col_b)
        for (int row = 0; row < n; ++row) {
            Int ca = u[row][a], cb = u[row][b];
            u[row][a] = p * ca + q * cb;
            u[row][b] = r * ca + s * cb;
        }
        Int ca = cur[a], cb = cur[b];
        cur[a] = p * ca + q * cb;
        cur[b] = r * ca + s * cb;
    };
    for (int i = 0; i < n - 1; ++i) {
        if (cur[i] == 0) continue;
        Xgcd g = xgcd(cur[n - 1], cur[i]);
        // det [[s, -cur[i]/g],[t, cur[n-1]/g]] = 1
        colop(n - 1, i, g.s, g.t, -(cur[i] / g.g), cur[n - 1] / g.g);
    }
    if (cur[n - 1] == -1) {
        for (int row = 0; row < n; ++row) u[row][n - 1] = -u[row][n - 1];
        cur[n - 1] = 1;
    }
    if (cur[n - 1] != 1) throw internal_error("lattice_split: reduction failed");
    for (int i = 0; i < n - 1; ++i) {
        if (cur[i] != 0) throw internal_error("lattice_split: reduction failed");
    }

    // invert U exactly; the inverse of a unimodular matrix is integral
    QMat uq = to_qmat(u);
    QMat tinv = inverse(uq);
    IMat t(n, IVec(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!is_integral(tinv[i][j])) throw internal_error("lattice_split: non-integral inverse");
            t[i][j] = rat_num(tinv[i][j]);
        }
    }
    if (t[n - 1] != v) throw internal_error("lattice_split: last row mismatch");
    return LatticeSplit{v, t, u};
}

Polytope project_level_set(const Polytope& q, const LatticeSplit& split) {
    int n = split.rank();
    if (q.rank() != n) throw input_error("project_level_set: rank mismatch");
    Rat level = dot(q.vertices().front(), split.v);
    std::vector<QVec> pts;
    for (const auto& w : q.vertices()) {
        if (dot(w, split.v) != level) throw precondition_error("project_level_set: polytope spans several levels");
        QVec img = mat_apply(split.to_split, w);
        img.pop_back();
        pts.push_back(std::move(img));
    }
    return Polytope::from_points(n - 1, std::move(pts));
}

} // namespace tbw
