// Plane tropical curves with constant coefficients: balanced weighted ray
// fans in R^3/R*1, their degree, the dual Newton polygon, and the bound on
// the ray count through A(d).
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "polytope.hpp"
#include "saturated.hpp"
#include "search.hpp"

namespace latmax {

struct TropicalRay {
    std::vector<Int> u;  // canonical representative: min coordinate 0, primitive
    Int mult = 1;
};

struct TropicalCurve {
    std::vector<TropicalRay> rays;
    std::size_t ambient() const { return rays.empty() ? 0 : rays.front().u.size(); }
};

enum class CurveErrorKind {
    Empty,
    WrongDimension,
    BadMultiplicity,
    NonCanonical,
    NonPrimitive,
    DuplicateDirection,
    Unbalanced,
};

class CurveValidationError : public std::invalid_argument {
  public:
    CurveValidationError(CurveErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    CurveErrorKind kind() const { return kind_; }

  private:
    CurveErrorKind kind_;
};

enum class BoundVerdict { Within, Violated, Unknown };

struct DegreeReport {
    Int degree = 0;
    Int ray_count = 0;
    ABound bound;                  // A-bound at n = degree
    BoundVerdict within = BoundVerdict::Unknown;
    bool plane = true;             // ambient R^3/R*1; the A(d) bound only applies here
};

namespace detail {

// Image of a ray representative in the lattice R^m/R*1, written in the
// consecutive-difference coordinates; primitivity and direction equality
// are decided there.
inline std::vector<Int> ray_differences(const std::vector<Int>& u) {
    std::vector<Int> d(u.size() - 1);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) d[i] = u[i] - u[i + 1];
    return d;
}

inline Int gcd_all(const std::vector<Int>& v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g;
}

}  // namespace detail

/// Compares ray count against the A(degree) bracket.
inline BoundVerdict classify_ray_count(Int degree, Int ray_count) {
    const ABound b = a_bounds(degree);
    if (ray_count <= b.lower) return BoundVerdict::Within;
    if (ray_count > b.upper) return BoundVerdict::Violated;
    return BoundVerdict::Unknown;
}

/// Checks canonical representatives, primitivity, distinct directions and
/// the balancing condition, then reads off the degree d from
/// sum(mult * u) = d * (1,...,1).
inline DegreeReport validate(const TropicalCurve& curve) {
    if (curve.rays.empty())
        throw CurveValidationError(CurveErrorKind::Empty, "curve has no rays");
    const std::size_t dim = curve.rays.front().u.size();
    if (dim < 3)
        throw CurveValidationError(CurveErrorKind::WrongDimension,
                                   "ray representatives need at least 3 coordinates");
    std::vector<std::vector<Int>> directions;
    std::vector<Int> sum(dim, 0);
    for (const auto& ray : curve.rays) {
        if (ray.u.size() != dim)
            throw CurveValidationError(CurveErrorKind::WrongDimension,
                                       "rays live in different ambient spaces");
        if (ray.mult < 1)
            throw CurveValidationError(CurveErrorKind::BadMultiplicity,
                                       "ray multiplicity must be positive");
        if (*std::min_element(ray.u.begin(), ray.u.end()) != 0)
            throw CurveValidationError(CurveErrorKind::NonCanonical,
                                       "ray representative must have minimum coordinate 0");
        const auto diff = detail::ray_differences(ray.u);
        if (detail::gcd_all(diff) != 1)
            throw CurveValidationError(CurveErrorKind::NonPrimitive,
                                       "ray representative must be primitive in the lattice");
        for (const auto& seen : directions)
            if (seen == diff)
                throw CurveValidationError(CurveErrorKind::DuplicateDirection,
                                           "two rays share a direction");
        directions.push_back(diff);
        for (std::size_t i = 0; i < dim; ++i) sum[i] += ray.mult * ray.u[i];
    }
    for (std::size_t i = 1; i < dim; ++i)
        if (sum[i] != sum[0])
            throw CurveValidationError(CurveErrorKind::Unbalanced,
                                       "weighted ray sum is not a multiple of (1,...,1)");
    DegreeReport report;
    report.degree = sum[0];
    report.ray_count = static_cast<Int>(curve.rays.size());
    report.plane = dim == 3;
    if (report.degree >= 1) {
        report.bound = a_bounds(report.degree);
        report.within =
            report.plane ? classify_ray_count(report.degree, report.ray_count) : BoundVerdict::Unknown;
    }
    return report;
}

/// Dual polygon of a plane curve: each ray maps to the edge outer normal
/// obtained by rotating its frame coordinates by -90 degrees and scaling
/// by the multiplicity.  The orientation is the one pinned by the
/// degree-diameter identity: the result always has simplicial diameter
/// equal to the degree and one edge per ray.
inline Polytope newton_polytope(const TropicalCurve& curve) {
    const DegreeReport report = validate(curve);
    if (!report.plane)
        throw CurveValidationError(CurveErrorKind::WrongDimension,
                                   "newton_polytope: only plane curves (ambient R^3/R*1)");
    if (report.degree < 1)
        throw CurveValidationError(CurveErrorKind::Unbalanced,
                                   "newton_polytope: degree must be at least 1");
    std::vector<DualVector> normals;
    normals.reserve(curve.rays.size());
    for (const auto& ray : curve.rays) {
        const DualVector frame{ray.u[0] - ray.u[1], ray.u[1] - ray.u[2]};
        normals.push_back(ray.mult * DualVector{frame.q, -frame.p});
    }
    const Polytope poly = reconstruct(make_configuration(std::move(normals)));
    if (simplicial_diameter(poly) != report.degree)
        throw std::logic_error("newton_polytope: degree-diameter identity failed");
    return poly;
}

struct RayBoundReport {
    DegreeReport degree_report;
    bool newton_checked = false;  // diameter identity verified on the dual polygon
    bool exact_bound = false;     // bound sharpened by the exhaustive search
};

/// Full consistency report: validation, the Newton-polygon diameter check
/// (plane curves) and the ray-count bound, optionally sharpened to the
/// exact A(d) by the search module.
inline RayBoundReport ray_bound_check(const TropicalCurve& curve, bool exact_search = false,
                                      const SearchLimits& limits = {}) {
    RayBoundReport out;
    out.degree_report = validate(curve);
    if (out.degree_report.plane && out.degree_report.degree >= 1) {
        newton_polytope(curve);  // throws if the diameter identity fails
        out.newton_checked = true;
        if (exact_search && out.degree_report.within == BoundVerdict::Unknown) {
            const SearchResult r = max_vertices_branch_and_bound(out.degree_report.degree, limits);
            if (r.status == SearchStatus::Exact) {
                out.exact_bound = true;
                out.degree_report.bound = ABound{out.degree_report.degree, r.a_of_n, r.a_of_n, true};
                out.degree_report.within = out.degree_report.ray_count <= r.a_of_n
                                               ? BoundVerdict::Within
                                               : BoundVerdict::Violated;
            }
        }
    }
    return out;
}

/// Inverse of the duality map: turns a balanced configuration into a plane
/// curve, one ray per vector, multiplicities from lattice lengths.
inline TropicalCurve curve_from_configuration(const VectorConfiguration& config) {
    TropicalCurve curve;
    for (DualVector v : config.vectors) {
        const Int mult = lattice_length(v);
        const DualVector primitive{v.p / mult, v.q / mult};
        const DualVector frame{-primitive.q, primitive.p};  // undo the -90 degree rotation
        std::vector<Int> u{frame.p + frame.q, frame.q, 0};
        const Int mn = *std::min_element(u.begin(), u.end());
        for (Int& c : u) c -= mn;
        curve.rays.push_back({std::move(u), mult});
    }
    return curve;
}

}  // namespace latmax
