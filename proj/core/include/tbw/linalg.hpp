// Small exact linear algebra: rational elimination for ranks and solves,
// integer Hermite normal form for canonical lattice bases. Matrices are
// row-major vectors of rows; all sizes are tiny.
#pragma once

#include "tbw/vec.hpp"

namespace tbw {

using QMat = std::vector<QVec>;
using IMat = std::vector<IVec>;

// Rank of the row span over Q.
int rank_of(const QMat& rows);
int rank_of(const IMat& rows);

// Reduced row echelon form (in place); returns pivot column indices.
std::vector<int> rref(QMat& m);

// Solve A x = b over Q for square nonsingular A; throws internal_error otherwise.
QVec solve_square(const QMat& a, const QVec& b);

// Inverse of a square rational matrix; throws internal_error if singular.
QMat inverse(const QMat& a);

// Row-style Hermite normal form of an integer matrix: returns a canonical
// basis of the row lattice (pivots positive, entries above pivots reduced
// into [0, pivot)). Zero rows are dropped.
IMat hnf_rows(IMat m);

// Canonical basis of {x integer : m * x = 0} (kernel of the row action on
// column vectors), as HNF rows.
IMat integer_kernel(const IMat& m);

inline QMat to_qmat(const IMat& m) {
    QMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_qvec(row));
    return r;
}

// Matrix-vector products.
inline QVec mat_apply(const IMat& m, const QVec& x) {
    QVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(x, m[i]);
    return r;
}
inline IVec mat_apply(const IMat& m, const IVec& x) {
    IVec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

} // namespace tbw
