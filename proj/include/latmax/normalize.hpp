// Constructive canonicalization of polygons inside n*Delta: grow until the
// polygon meets every side of the simplex in an edge of lattice length 1,
// then cut away non-vertex boundary lattice points, never losing vertices.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lattice.hpp"
#include "polytope.hpp"

namespace latmax {

namespace detail {

// Sides of n*Delta in processing order; `dir` is the primitive direction
// of the side walked counterclockwise around the simplex, `far` the corner
// the walk ends at.
struct Side {
    int id;             // 0: y=0, 1: x=0, 2: x+y=n
    LatticePoint dir;
    LatticePoint far;
};

inline std::array<Side, 3> sides_of(Int n) {
    return {{{0, {1, 0}, {n, 0}}, {1, {0, -1}, {0, 0}}, {2, {-1, 1}, {0, n}}}};
}

inline bool on_side(LatticePoint v, int side, Int n) {
    switch (side) {
        case 0: return v.y == 0;
        case 1: return v.x == 0;
        default: return v.x + v.y == n;
    }
}

inline bool in_simplex(LatticePoint v, Int n) {
    return v.x >= 0 && v.y >= 0 && v.x + v.y <= n;
}

inline bool on_simplex_boundary(LatticePoint v, Int n) {
    return v.y == 0 || v.x == 0 || v.x + v.y == n;
}

// The face of P on one side of n*Delta: empty, a vertex, or an edge whose
// endpoints are returned in the side's ccw direction.
struct SideContact {
    std::vector<std::size_t> idx;  // vertex indices on the side, along `dir`
    bool is_edge() const { return idx.size() == 2; }
    bool single() const { return idx.size() == 1; }
};

inline SideContact side_contact(const Polytope& p, const Side& side, Int n) {
    SideContact c;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (on_side(p.vertices[i], side.id, n)) c.idx.push_back(i);
    if (c.idx.size() == 2) {
        const LatticePoint d = p.vertices[c.idx[1]] - p.vertices[c.idx[0]];
        if (d.x * side.dir.y - d.y * side.dir.x != 0)
            throw std::logic_error("side_contact: contact not parallel to side");
        if (d.x * side.dir.x + d.y * side.dir.y < 0) std::swap(c.idx[0], c.idx[1]);
    }
    return c;
}

inline Int contact_length(const Polytope& p, const SideContact& c) {
    return lattice_length(p.vertices[c.idx[1]] - p.vertices[c.idx[0]]);
}

// Construction "grow": single-vertex contact v0 is widened into an edge by
// translating the boundary arc from v0 up to (exclusive) the next vertex
// on the simplex boundary by one step along the side.  When v0 sits on
// the far corner of the side the arc is walked the other way and shifted
// backwards, which is the mirrored construction.
inline std::optional<Polytope> grow_edge_on_side(const Polytope& p, const Side& side, Int n,
                                                 std::size_t v0_idx) {
    const std::size_t m = p.vertices.size();
    if (m < 2) return std::nullopt;
    const bool reversed = p.vertices[v0_idx] == side.far;
    const LatticePoint shift = reversed ? LatticePoint{-side.dir.x, -side.dir.y} : side.dir;
    std::vector<LatticePoint> moved;
    std::size_t i = v0_idx;
    for (std::size_t steps = 0; steps < m; ++steps) {
        moved.push_back(p.vertices[i] + shift);
        const std::size_t next = reversed ? (i + m - 1) % m : (i + 1) % m;
        if (on_simplex_boundary(p.vertices[next], n)) break;
        i = next;
    }
    for (const auto& v : moved)
        if (!in_simplex(v, n)) return std::nullopt;
    std::vector<LatticePoint> pts(p.vertices);
    pts.insert(pts.end(), moved.begin(), moved.end());
    return convex_hull(pts);
}

// Construction "shrink": a contact edge of lattice length k > 1 from v0 to
// v1 = v0 + k*dir is shortened by replacing v1 with v0 + dir.
inline Polytope shrink_edge_on_side(const Polytope& p, const Side& side, const SideContact& c) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (i != c.idx[1]) pts.push_back(p.vertices[i]);
    pts.push_back(p.vertices[c.idx[0]] + side.dir);
    return convex_hull(pts);
}

}  // namespace detail

/// Minkowski sum with (n - diameter) copies of the unimodular triangle:
/// the result has diameter exactly n and touches all three sides.
inline Polytope touch_all_edges(const Polytope& p, Int n) {
    const Int d = simplicial_diameter(p);
    if (d > n) throw std::domain_error("touch_all_edges: polytope does not fit in n*Delta");
    if (d == n) return p;
    const Int k = n - d;
    const Polytope dilated_triangle =
        convex_hull({LatticePoint{0, 0}, LatticePoint{k, 0}, LatticePoint{0, k}});
    return minkowski_sum(p, dilated_triangle);
}

/// True when P meets every side of n*Delta in an edge of lattice length 1.
inline bool has_unit_side_contacts(const Polytope& p, Int n) {
    for (const auto& side : detail::sides_of(n)) {
        const auto c = detail::side_contact(p, side, n);
        if (!c.is_edge() || detail::contact_length(p, c) != 1) return false;
    }
    return true;
}

/**
 * Drives the grow/shrink constructions until the polygon meets every side
 * of n*Delta in an edge of lattice length 1.  Grow steps are exhausted
 * first (they only enlarge the polygon, so established edge contacts
 * survive), then every over-long contact edge is shortened; shrinking can
 * demote a neighbouring contact to a single vertex, so the two stages
 * alternate.  The vertex count never decreases.
 *
 * For small n the target is not always attainable (shrinking one side can
 * be forced to pass through a corner shared with another side
 * indefinitely); the loop detects a repeated state and returns the last
 * polygon reached, so callers must check has_unit_side_contacts.
 */
inline Polytope unit_boundary_edges(const Polytope& p, Int n) {
    if (simplicial_diameter(p) != n)
        throw std::domain_error("unit_boundary_edges: diameter must equal n");
    const auto sides = detail::sides_of(n);
    Polytope cur = p;
    std::set<std::vector<LatticePoint>> seen;
    while (seen.insert(cur.vertices).second) {
        // grow stage: widen single-vertex contacts into edges
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& side : sides) {
                const auto c = detail::side_contact(cur, side, n);
                if (!c.single()) continue;
                if (auto grown = detail::grow_edge_on_side(cur, side, n, c.idx[0])) {
                    cur = std::move(*grown);
                    changed = true;
                }
            }
        }
        // shrink stage: shorten contact edges of lattice length > 1
        for (const auto& side : sides) {
            const auto c = detail::side_contact(cur, side, n);
            if (c.is_edge() && detail::contact_length(cur, c) > 1)
                cur = detail::shrink_edge_on_side(cur, side, c);
        }
        if (has_unit_side_contacts(cur, n)) break;
    }
    return cur;
}

namespace detail {

// One cut: x is a non-vertex lattice point on edge (v_i, v_i+1); slicing
// along the line through x and v_i-1 removes v_i and makes x a vertex,
// keeping every other vertex.  `remove_successor` mirrors the cut to
// remove v_i+1 via the line through x and v_i+2 instead.
inline std::vector<LatticePoint> cut_at(const std::vector<LatticePoint>& vs, std::size_t edge_idx,
                                        LatticePoint x, bool remove_successor) {
    std::vector<LatticePoint> out(vs);
    const std::size_t victim = remove_successor ? (edge_idx + 1) % vs.size() : edge_idx;
    out[victim] = x;
    return out;
}

struct BoundaryPoint {
    LatticePoint x;
    std::size_t edge_idx;
};

inline std::optional<BoundaryPoint> smallest_interior_boundary_point(
    const std::vector<LatticePoint>& vs) {
    std::optional<BoundaryPoint> best;
    const std::size_t m = vs.size();
    for (std::size_t i = 0; i < m; ++i) {
        const LatticePoint e = vs[(i + 1) % m] - vs[i];
        const Int len = lattice_length(e);
        if (len < 2) continue;
        const LatticePoint step{e.x / len, e.y / len};
        for (Int t = 1; t < len; ++t) {
            const LatticePoint x = vs[i] + LatticePoint{t * step.x, t * step.y};
            if (!best || x < best->x) best = BoundaryPoint{x, i};
        }
    }
    return best;
}

inline Polytope strip_impl(const Polytope& p, const std::vector<LatticePoint>* protected_pts) {
    if (p.f0() == 1) return p;
    if (p.f0() == 2) {  // a segment keeps its endpoints' count but shrinks to one primitive step
        const LatticePoint d = p.vertices[1] - p.vertices[0];
        const Int len = lattice_length(d);
        return convex_hull(
            {p.vertices[0], p.vertices[0] + LatticePoint{d.x / len, d.y / len}});
    }
    std::vector<LatticePoint> vs(p.vertices);
    while (auto bp = smallest_interior_boundary_point(vs)) {
        bool remove_successor = false;
        if (protected_pts) {
            const auto is_protected = [&](LatticePoint v) {
                return std::find(protected_pts->begin(), protected_pts->end(), v) !=
                       protected_pts->end();
            };
            const LatticePoint pred_victim = vs[bp->edge_idx];
            const LatticePoint succ_victim = vs[(bp->edge_idx + 1) % vs.size()];
            if (is_protected(pred_victim) && !is_protected(succ_victim)) remove_successor = true;
        }
        vs = cut_at(vs, bp->edge_idx, bp->x, remove_successor);
    }
    return convex_hull(vs);
}

}  // namespace detail

/// Cuts lattice points strictly inside edges until every boundary lattice
/// point is a vertex; the vertex count is unchanged (a segment shrinks to
/// a primitive segment) and each step removes at least one lattice point,
/// so the loop terminates.
inline Polytope strip_boundary_points(const Polytope& p) {
    return detail::strip_impl(p, nullptr);
}

/// True when every edge of P has lattice length 1, i.e. all boundary
/// lattice points are vertices.
inline bool boundary_points_are_vertices(const Polytope& p) {
    const std::size_t m = p.vertices.size();
    if (m < 2) return true;
    for (std::size_t i = 0; i < m; ++i)
        if (lattice_length(p.vertices[(i + 1) % m] - p.vertices[i]) > 1) return false;
    return m > 2 || lattice_length(p.vertices[1] - p.vertices[0]) == 1;
}

struct CanonicalizeReport {
    Polytope polytope;
    Int f0_in = 0;
    Int f0_out = 0;
    bool unit_contacts = false;             // all three sides met in unit edges (on output)
    bool boundary_clean = false;            // all boundary lattice points are vertices (on output)
    bool arc_condition = false;             // every arc between contact edges had >= 3 vertices
};

namespace detail {

// Vertex count of each boundary arc between consecutive unit contact
// edges, endpoints included.
inline bool arcs_have_three_vertices(const Polytope& p, Int n) {
    const auto sides = sides_of(n);
    std::vector<std::pair<std::size_t, std::size_t>> contacts;  // (near idx, far idx) per side
    for (const auto& side : sides) {
        const auto c = side_contact(p, side, n);
        if (!c.is_edge()) return false;
        contacts.emplace_back(c.idx[0], c.idx[1]);
    }
    const std::size_t m = p.vertices.size();
    std::sort(contacts.begin(), contacts.end());
    for (std::size_t t = 0; t < contacts.size(); ++t) {
        const std::size_t from = contacts[t].second;  // far endpoint of this contact edge
        const std::size_t to = contacts[(t + 1) % contacts.size()].first;
        const std::size_t arc_vertices = (to + m - from) % m + 1;
        if (arc_vertices < 3) return false;
    }
    return true;
}

}  // namespace detail

/**
 * Full pipeline: grow to diameter n, establish unit contact edges, then
 * strip non-vertex boundary lattice points with cuts oriented away from
 * the contact edges.  When every arc between contact edges carries at
 * least 3 vertices the cuts cannot touch the contacts and the output
 * enjoys both boundary properties; otherwise the report states which
 * properties actually hold.
 */
inline CanonicalizeReport canonicalize_maximal(const Polytope& p, Int n) {
    CanonicalizeReport report;
    report.f0_in = static_cast<Int>(p.f0());
    Polytope cur = touch_all_edges(p, n);
    cur = unit_boundary_edges(cur, n);

    const bool units_ready = has_unit_side_contacts(cur, n);
    report.arc_condition = units_ready && detail::arcs_have_three_vertices(cur, n);

    std::vector<LatticePoint> protected_pts;
    if (units_ready) {
        for (const auto& side : detail::sides_of(n)) {
            const auto c = detail::side_contact(cur, side, n);
            protected_pts.push_back(cur.vertices[c.idx[0]]);
            protected_pts.push_back(cur.vertices[c.idx[1]]);
        }
    }
    cur = detail::strip_impl(cur, units_ready ? &protected_pts : nullptr);

    report.f0_out = static_cast<Int>(cur.f0());
    report.unit_contacts = has_unit_side_contacts(cur, n);
    report.boundary_clean = boundary_points_are_vertices(cur);
    report.polytope = std::move(cur);
    return report;
}

}  // namespace latmax
