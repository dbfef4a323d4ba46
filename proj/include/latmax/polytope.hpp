// Lattice polygons up to translation and their correspondence with
// balanced vector configurations in the dual lattice.
//
// A Polytope is stored in canonical form: vertices in strictly convex
// counterclockwise position, starting at the lexicographically smallest
// vertex, translated so that min x = min y = 0.  Degenerate cases (a
// single point, a segment) are first-class.  A VectorConfiguration is a
// set of nonzero dual vectors with pairwise distinct directions, kept
// sorted by counterclockwise angle from (1,0); it is "balanced" when the
// vectors sum to zero.  Canonical forms make equality structural.
#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "lattice.hpp"
#include "rational.hpp"

namespace latmax {

inline Int cross(LatticePoint o, LatticePoint a, LatticePoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline Int cross(DualVector a, DualVector b) { return a.p * b.q - a.q * b.p; }
inline Int dot(DualVector a, DualVector b) { return a.p * b.p + a.q * b.q; }

struct Polytope {
    std::vector<LatticePoint> vertices;  // canonical; length >= 1

    friend bool operator==(const Polytope&, const Polytope&) = default;
    std::size_t f0() const { return vertices.size(); }
};

namespace detail {

// Rotate the cyclic vertex list so the lexicographically smallest vertex
// comes first, and translate so min x = min y = 0.
inline void canonicalize_vertices(std::vector<LatticePoint>& vs) {
    Int mnx = vs.front().x, mny = vs.front().y;
    for (const auto& v : vs) { mnx = std::min(mnx, v.x); mny = std::min(mny, v.y); }
    for (auto& v : vs) { v.x -= mnx; v.y -= mny; }
    const auto first = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), first, vs.end());
}

}  // namespace detail

/// Convex hull with exact integer orientation tests.  Collinear boundary
/// points are dropped, so the result is strictly convex; a single point
/// and a segment come out with 1 and 2 vertices.
inline Polytope convex_hull(std::span<const LatticePoint> points) {
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) {
        Polytope p{{pts[0]}};
        detail::canonicalize_vertices(p.vertices);
        return p;
    }
    const std::size_t n = pts.size();
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    Polytope p{std::move(hull)};
    detail::canonicalize_vertices(p.vertices);
    return p;
}

inline Polytope convex_hull(std::initializer_list<LatticePoint> points) {
    return convex_hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

// --- vector configurations -------------------------------------------------

namespace detail {

// Angular half (0: angle in [0,pi), 1: [pi,2pi)) measured ccw from (1,0).
inline int angular_half(DualVector v) {
    return (v.q > 0 || (v.q == 0 && v.p > 0)) ? 0 : 1;
}

inline bool angular_less(DualVector a, DualVector b) {
    const int ha = angular_half(a), hb = angular_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline bool same_direction(DualVector a, DualVector b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

}  // namespace detail

struct VectorConfiguration {
    std::vector<DualVector> vectors;  // nonzero, distinct directions, angular order

    friend bool operator==(const VectorConfiguration&, const VectorConfiguration&) = default;
    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

inline bool is_balanced(const VectorConfiguration& t) {
    DualVector s{0, 0};
    for (DualVector v : t.vectors) s = s + v;
    return s.is_zero();
}

/// Canonical configuration from an arbitrary vector list; rejects zero
/// vectors and repeated directions.
inline VectorConfiguration make_configuration(std::vector<DualVector> vectors) {
    for (DualVector v : vectors)
        if (v.is_zero()) throw std::invalid_argument("configuration: zero vector not allowed");
    std::sort(vectors.begin(), vectors.end(), detail::angular_less);
    for (std::size_t i = 1; i < vectors.size(); ++i)
        if (detail::same_direction(vectors[i - 1], vectors[i]))
            throw std::invalid_argument("configuration: two vectors share a direction");
    return VectorConfiguration{std::move(vectors)};
}

/// Edge-normal map: each edge contributes its primitive outer normal
/// scaled by the edge's lattice length.  A point maps to the empty
/// configuration, a segment to an opposite pair.
inline VectorConfiguration d_map(const Polytope& p) {
    const std::size_t m = p.vertices.size();
    if (m == 1) return {};
    std::vector<DualVector> vs;
    vs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const LatticePoint e = p.vertices[(i + 1) % m] - p.vertices[i];
        vs.push_back({e.y, -e.x});  // ccw edge vector rotated -90 deg = outer normal * length
    }
    return make_configuration(std::move(vs));
}

/**
 * Inverse of d_map on balanced configurations.  Walking the edges in the
 * angular order of their outer normals traces the polygon boundary
 * counterclockwise: the normal (p,q) becomes the edge vector (-q,p).
 * The walk closes exactly when the configuration is balanced.
 */
inline Polytope reconstruct(const VectorConfiguration& t) {
    if (!is_balanced(t)) throw std::invalid_argument("reconstruct: configuration is not balanced");
    if (t.empty()) return Polytope{{LatticePoint{0, 0}}};
    std::vector<LatticePoint> vs;
    vs.reserve(t.size());
    LatticePoint cur{0, 0};
    for (DualVector v : t.vectors) {
        vs.push_back(cur);
        cur = cur + LatticePoint{-v.q, v.p};
    }
    if (vs.size() == 2) {  // segment: keep endpoints in hull order
        if (vs[1] < vs[0]) std::swap(vs[0], vs[1]);
    }
    detail::canonicalize_vertices(vs);
    return Polytope{std::move(vs)};
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    std::vector<LatticePoint> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) sums.push_back(a + b);
    return convex_hull(sums);
}

/**
 * The boxplus merge on configurations: union with vectors sharing a
 * direction replaced by their sum.  Mirrors the Minkowski sum through
 * d_map and preserves balancedness.
 */
inline VectorConfiguration config_merge(const VectorConfiguration& t, const VectorConfiguration& u) {
    std::vector<DualVector> out;
    out.reserve(t.size() + u.size());
    std::size_t i = 0, j = 0;
    while (i < t.size() && j < u.size()) {
        if (detail::same_direction(t.vectors[i], u.vectors[j])) {
            out.push_back(t.vectors[i] + u.vectors[j]);
            ++i, ++j;
        } else if (detail::angular_less(t.vectors[i], u.vectors[j])) {
            out.push_back(t.vectors[i++]);
        } else {
            out.push_back(u.vectors[j++]);
        }
    }
    for (; i < t.size(); ++i) out.push_back(t.vectors[i]);
    for (; j < u.size(); ++j) out.push_back(u.vectors[j]);
    return VectorConfiguration{std::move(out)};
}

/// Simplicial diameter: the smallest n such that a translate fits in the
/// n-th dilate of the unimodular triangle.  Equals the sum of the maxima
/// of the three normals b_i; in canonical form (min x = min y = 0) that
/// collapses to max(x + y), and the canonical embedding itself is the
/// witness translate.
inline Int simplicial_diameter(const Polytope& p) {
    Int m = 0;
    for (const auto& v : p.vertices) m = std::max(m, v.x + v.y);
    return m;
}

/// One third of the summed asymmetric norms of a configuration; an
/// integer whenever the configuration is balanced, where it coincides
/// with the simplicial diameter of the corresponding polytope.
inline Rational valuation_m(const VectorConfiguration& t) {
    Int s = 0;
    for (DualVector v : t.vectors) s += asymmetric_norm(v);
    return Rational(s, 3);
}

}  // namespace latmax
