// Dense exact vectors over Int / Rat with the handful of operations the
// polyhedral kernel needs. Dimensions here are tiny (rank <= 6), so
// std::vector value semantics are fine.
#pragma once

#include "tbw/numeric.hpp"

#include <vector>

namespace tbw {

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec iadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec isub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec iscale(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// c1*a + c2*b
inline IVec icomb(const Int& c1, const IVec& a, const Int& c2, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c1 * a[i] + c2 * b[i];
    return r;
}

inline QVec qadd(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec qscale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const IVec& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

inline bool is_zero(const QVec& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

inline Int content(const IVec& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    return g;
}

// Divide out the content; zero vectors stay zero.
inline IVec primitive(const IVec& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

inline bool is_primitive(const IVec& a) { return content(a) == 1; }

// Unique primitive integer vector on the ray through a nonzero rational vector.
inline IVec primitive_direction(const QVec& a) {
    Int mult = 1;
    for (const auto& x : a) mult = lcm(mult, rat_den(x));
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = rat_num(a[i] * Rat(mult));
    return primitive(r);
}

inline QVec to_qvec(const IVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

// Exact integer vector from a rational one; throws if any entry is fractional.
inline IVec to_ivec(const QVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!is_integral(a[i])) throw internal_error("to_ivec: fractional entry");
        r[i] = rat_num(a[i]);
    }
    return r;
}

inline bool is_integral(const QVec& a) {
    for (const auto& x : a) if (!is_integral(x)) return false;
    return true;
}

// Lexicographic orders used for all canonical sorting.
inline bool lex_less(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

} // namespace tbw
