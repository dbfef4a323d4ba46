// Exact arithmetic for the rank-2 lattice behind dilated unimodular
// triangles, its dual lattice, and the asymmetric norm induced by the
// triangle's outer normal fan.
//
// Coordinates live in the canonical frame in which the unimodular triangle
// is conv((0,0),(1,0),(0,1)) and its n-th dilate is
// {(x,y) : x >= 0, y >= 0, x + y <= n}.  The three primitive outer normals
// of the triangle are b1 = (1,1), b2 = (-1,0), b3 = (0,-1); they span the
// absorbing set K = conv(b1,b2,b3) whose Minkowski functional is the
// asymmetric norm implemented here.  All operations are pure and all
// values are immutable; everything is safe to use concurrently.
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace latmax {

using Int = std::int64_t;

struct LatticePoint {
    Int x = 0;
    Int y = 0;
    friend constexpr bool operator==(LatticePoint, LatticePoint) = default;
    friend constexpr auto operator<=>(LatticePoint, LatticePoint) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }

/// A dual lattice vector (a linear form p*x + q*y on the canonical frame).
struct DualVector {
    Int p = 0;
    Int q = 0;
    friend constexpr bool operator==(DualVector, DualVector) = default;
    friend constexpr auto operator<=>(DualVector, DualVector) = default;
    constexpr bool is_zero() const { return p == 0 && q == 0; }
    constexpr Int eval(LatticePoint a) const { return p * a.x + q * a.y; }
};

constexpr DualVector operator+(DualVector a, DualVector b) { return {a.p + b.p, a.q + b.q}; }
constexpr DualVector operator-(DualVector a, DualVector b) { return {a.p - b.p, a.q - b.q}; }
constexpr DualVector operator-(DualVector a) { return {-a.p, -a.q}; }
constexpr DualVector operator*(Int s, DualVector a) { return {s * a.p, s * a.q}; }

/// Outer normals (b1, b2, b3) of the unimodular triangle; they sum to zero
/// and each has asymmetric norm 1.
constexpr std::array<DualVector, 3> canonical_normal_fan() {
    return {{{1, 1}, {-1, 0}, {0, -1}}};
}

/// Minkowski functional of K = conv(b1,b2,b3): the smallest lambda >= 0
/// with v in lambda*K.  Closed form: maximum of the three facet
/// functionals of K.  Always a non-negative integer on lattice input,
/// zero exactly for the zero vector.
constexpr Int asymmetric_norm(DualVector v) {
    const Int f1 = -v.p + 2 * v.q;
    const Int f2 = -v.p - v.q;
    const Int f3 = 2 * v.p - v.q;
    Int m = f1;
    if (f2 > m) m = f2;
    if (f3 > m) m = f3;
    return m;
}

/// gcd of the coordinates; lattice_length(0) = 0.
constexpr Int lattice_length(DualVector v) { return std::gcd(v.p, v.q); }
constexpr Int lattice_length(LatticePoint a) { return std::gcd(a.x, a.y); }

constexpr bool is_primitive(DualVector v) { return lattice_length(v) == 1; }

inline DualVector primitive_part(DualVector v) {
    if (v.is_zero()) throw std::domain_error("primitive_part: zero vector has no direction");
    const Int l = lattice_length(v);
    return {v.p / l, v.q / l};
}

/// The linear map sending b1 -> b2 -> b3 -> b1.  Order three, preserves the
/// asymmetric norm and primitivity, and v + rot(v) + rot(rot(v)) = 0.
constexpr DualVector cyclic_rotate(DualVector v) { return {-v.q, v.p - v.q}; }

/// Euler totient by trial division; inputs stay small throughout.
inline Int totient(Int l) {
    if (l <= 0) throw std::domain_error("totient: argument must be positive");
    Int result = l;
    Int m = l;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Embedding of the dual lattice into {w in Z^3 : w1+w2+w3 = 0}.  In this
/// view the norm is the maximum of the cyclic coordinate differences.
constexpr std::array<Int, 3> to_triple(DualVector v) { return {v.p, v.q - v.p, -v.q}; }

struct ConeLocation {
    int index = 0;            // which half-open cone C~_i contains v, i in {1,2,3}
    bool on_boundary_ray = false;  // v lies on a ray of the fan
};

/// Locates v in the face fan of K.  The half-open cone C~_i contains the
/// ray of b_j and excludes the ray of b_k for cyclic (i,j,k), so the three
/// half-open cones partition the nonzero dual vectors.
inline ConeLocation cone_index(DualVector v) {
    if (v.is_zero()) throw std::domain_error("cone_index: zero vector");
    // Dual-basis coefficients of v on each cone; det(b_j,b_k) = 1 for cyclic (i,j,k).
    const Int c2_1 = -v.p, c3_1 = -v.q;           // C1 = cone(b2,b3)
    const Int c3_2 = v.p - v.q, c1_2 = v.p;       // C2 = cone(b3,b1)
    const Int c1_3 = v.q, c2_3 = v.q - v.p;       // C3 = cone(b1,b2)
    if (c2_1 > 0 && c3_1 >= 0) return {1, c3_1 == 0};
    if (c3_2 > 0 && c1_2 >= 0) return {2, c1_2 == 0};
    if (c1_3 > 0 && c2_3 >= 0) return {3, c2_3 == 0};
    throw std::logic_error("cone_index: fan does not cover input");
}

/// All primitive dual vectors of norm l, 3*phi(l) of them, in a fixed
/// order: the phi(l) vectors of C~_1 by increasing b2-coordinate, then
/// their images under cyclic_rotate cone by cone.
inline std::vector<DualVector> primitive_vectors_of_norm(Int l) {
    if (l < 1) throw std::domain_error("primitive_vectors_of_norm: norm must be >= 1");
    std::vector<DualVector> base;
    for (Int c2 = 1; c2 <= l; ++c2) {
        if (std::gcd(c2, l) == 1) base.push_back({-c2, c2 - l});  // c2*b2 + (l-c2)*b3
    }
    std::vector<DualVector> out;
    out.reserve(3 * base.size());
    for (DualVector v : base) out.push_back(v);
    for (DualVector v : base) out.push_back(cyclic_rotate(v));
    for (DualVector v : base) out.push_back(cyclic_rotate(cyclic_rotate(v)));
    return out;
}

}  // namespace latmax
