#include "tbw/linalg.hpp"

namespace tbw {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank_of(const QMat& rows) {
    QMat c = rows;
    return static_cast<int>(rref(c).size());
}

int rank_of(const IMat& rows) {
    return rank_of(to_qmat(rows));
}

QVec solve_square(const QMat& a, const QVec& b) {
    size_t n = a.size();
    if (n == 0) return {};
    QMat aug = a;
    for (size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    if (pivots.size() != n) throw internal_error("solve_square: singular system");
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

QMat inverse(const QMat& a) {
    size_t n = a.size();
    QMat aug = a;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    auto pivots = rref(aug);
    if (pivots.size() != n) throw internal_error("inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

IMat hnf_rows(IMat m) {
    if (m.empty()) return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd the column below r into row r via unimodular row ops
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            while (m[i][c] != 0) {
                Int q = m[r][c] / m[i][c];
                for (size_t j = 0; j < cols; ++j) m[r][j] -= q * m[i][j];
                std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            Int q = m[i][c] / m[r][c];
            if (m[i][c] - q * m[r][c] < 0) --q;
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
            }
        }
        ++r;
    }
    m.resize(r);
    return m;
}

IMat integer_kernel(const IMat& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    // Column operations on m, mirrored on an identity matrix; columns of the
    // mirror that end over zero columns of m form a kernel basis.
    IMat a = m;
    IMat u(cols, IVec(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1; // u[j] = j-th column vector
    size_t rows = a.size();
    size_t c = 0;
    for (size_t r = 0; r < rows && c < cols; ++r) {
        size_t p = c;
        while (p < cols && a[r][p] == 0) ++p;
        if (p == cols) continue;
        // move pivot column to position c
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][p], a[i][c]);
        std::swap(u[p], u[c]);
        for (size_t j = c + 1; j < cols; ++j) {
            while (a[r][j] != 0) {
                Int q = a[r][c] / a[r][j];
                for (size_t i = 0; i < rows; ++i) a[i][c] -= q * a[i][j];
                u[c] = isub(u[c], iscale(q, u[j]));
                for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][j]);
                std::swap(u[c], u[j]);
            }
        }
        ++c;
    }
    IMat kernel;
    for (size_t j = c; j < cols; ++j) kernel.push_back(u[j]);
    return hnf_rows(kernel);
}

} // namespace tbw
