// Exact arithmetic aliases and small helpers shared by the whole library.
// Everything downstream computes over Int / Rat; no floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tbw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// floor(p/q) for exact rationals
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

// Extended gcd: returns g = gcd(a,b) and s,t with s*a + t*b = g, g >= 0.
struct Xgcd {
    Int g, s, t;
};
inline Xgcd xgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b; b = r;
        Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
        Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
    }
    if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
    return {a, s0, t0};
}

// Error taxonomy; the CLI maps these to distinct exit codes.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& m) : std::runtime_error(m) {}
};
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

// Rationals cross the JSON boundary as "p/q" strings (plain integers allowed).
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

inline std::string rat_to_string(const Rat& q) {
    if (is_integral(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, pos)), d(s.substr(pos + 1));
        if (d == 0) throw input_error("rational with zero denominator: " + s);
        return Rat(n, d);
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + s);
    }
}

} // namespace tbw
