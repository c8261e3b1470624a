// Exact polytopes with both representations kept canonical.
//
// A Polytope stores lex-sorted extreme vertices, facet halfspaces with
// primitive inward integer normals, and an HNF basis of affine-span
// equations when the polytope is not full-dimensional. Vertices may be
// rational; a polytope with integral vertices doubles as a lattice polytope.
#pragma once

#include "tbw/dd.hpp"

#include <optional>
#include <vector>

namespace tbw {

// <u, normal> + offset >= 0 on the polytope
struct Halfspace {
    IVec normal; // primitive
    Rat offset;
    bool operator==(const Halfspace&) const = default;
};

// <u, normal> + offset == 0 on the polytope (integer data, HNF-canonical rows)
struct Equation {
    IVec normal;
    Int offset;
    bool operator==(const Equation&) const = default;
};

class Polytope {
public:
    Polytope() = default; // invalid sentinel; use the factories

    static Polytope from_points(int rank, std::vector<QVec> points);
    static Polytope from_lattice_points(int rank, const std::vector<IVec>& points);
    // Throws input_error on empty or unbounded regions.
    static Polytope from_halfspaces(int rank, const std::vector<Halfspace>& halfspaces,
                                    const std::vector<Equation>& equations = {});
    // Empty region yields nullopt instead of throwing; unbounded still throws.
    static std::optional<Polytope> try_from_halfspaces(int rank,
                                                       const std::vector<Halfspace>& halfspaces,
                                                       const std::vector<Equation>& equations = {});

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    bool valid() const { return rank_ >= 0; }
    bool full_dimensional() const { return dim_ == rank_; }
    const std::vector<QVec>& vertices() const { return verts_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Equation>& span_equations() const { return span_; }

    bool is_lattice() const;
    bool contains(const QVec& p) const;
    bool contains(const IVec& p) const;

    Polytope dilate(const Rat& m) const;    // m > 0
    Polytope translate(const QVec& t) const;

    bool operator==(const Polytope& o) const { return rank_ == o.rank_ && verts_ == o.verts_; }

private:
    int rank_ = -1;
    int dim_ = -1;
    std::vector<QVec> verts_;
    std::vector<Halfspace> facets_;
    std::vector<Equation> span_;
};

// All integer points of P, in lexicographic order. Uses Fourier-Motzkin
// prefix bounds so the walk only visits feasible prefixes.
std::vector<IVec> lattice_points(const Polytope& p);

// One face of the lattice: vertex indices, the facets active on it, and the
// dimension (-1 for the empty face).
struct Face {
    std::vector<int> vertex_ids;
    int dim;
    std::vector<int> facet_ids;
    bool operator==(const Face&) const = default;
};

// Full face lattice including the empty face and the polytope itself,
// ordered by (dim, vertex ids).
std::vector<Face> faces(const Polytope& p);

// f-vector (f_0, ..., f_dim); the empty face is not counted.
std::vector<Int> f_vector(const Polytope& p);

// P cut with the hyperplane {<u, v> = level}; errors if level is outside
// the v-range of P.
Polytope slice(const Polytope& p, const IVec& v, const Rat& level);

// Intersection with the slab {lo <= <u, v> <= hi}; nullopt when empty.
std::optional<Polytope> try_slab(const Polytope& p, const IVec& v, const Rat& lo, const Rat& hi);

Rat min_pairing(const Polytope& p, const IVec& v);
Rat max_pairing(const Polytope& p, const IVec& v);

bool equal_up_to_translation(const Polytope& a, const Polytope& b);

} // namespace tbw
