#pragma once

#include "tbw/io.hpp"

#include <initializer_list>
#include <string>

namespace tbwtest {

using namespace tbw;

inline Rat rat(const std::string& s) { return rat_from_string(s); }

inline IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline QVec qv(std::initializer_list<const char*> xs) {
    QVec v;
    for (const char* x : xs) v.push_back(rat(x));
    return v;
}

inline Polytope poly_ipts(int rank, std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<IVec> ps;
    for (auto p : pts) ps.push_back(iv(p));
    return Polytope::from_lattice_points(rank, ps);
}

inline Polytope poly_qpts(int rank, std::initializer_list<std::initializer_list<const char*>> pts) {
    std::vector<QVec> ps;
    for (auto p : pts) ps.push_back(qv(p));
    return Polytope::from_points(rank, ps);
}

// standard fixtures
inline Polytope segment02() { return poly_ipts(1, {{0}, {2}}); }
inline Polytope unit_square() { return poly_ipts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline Polytope simplex2() { return poly_ipts(2, {{0, 0}, {1, 0}, {0, 1}}); }
inline Polytope simplex3() { return poly_ipts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline Polytope cube3() {
    return poly_ipts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}
inline Polytope square_pyramid() {
    return poly_ipts(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
}

// the flop divisor-pair fixture: a projective small modification between two
// triangulations of the cone over a quadrilateral
inline MdpInput flop_input() {
    MdpInput m;
    m.p_minus = poly_ipts(3, {{0, -1, -1}, {0, 1, -1}, {2, 3, 1}, {-2, 3, 1}, {2, -3, 1}, {-2, -3, 1}});
    m.plus_coeffs = {
        {iv({0, 0, -1}), Int(1)},
        {iv({1, 0, 1}), Int(2)},
        {iv({0, 1, 1}), Int(1)},
        {iv({-1, 0, 1}), Int(2)},
        {iv({0, -1, 1}), Int(1)},
    };
    return m;
}

inline MdpInput identity_input() {
    MdpInput m;
    m.p_minus = simplex2();
    m.plus_coeffs = {
        {iv({1, 0}), Int(0)},
        {iv({0, 1}), Int(0)},
        {iv({-1, -1}), Int(1)},
    };
    return m;
}

} // namespace tbwtest
