// Saturated sets of primitive dual vectors, the vertex-maximal family
// they generate, exact values and bounds for the maximal vertex count
// A(n), and the asymptotic ratio check.
#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lattice.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace latmax {

/// A saturated set: all primitive vectors of norm <= q plus a proper
/// subset ("extras") of the norm-(q+1) level.
struct SaturatedSet {
    Int q = 0;                        // norm bound of the full level part
    std::vector<DualVector> extras;   // vectors of norm q+1, |extras| < 3*phi(q+1)
};

/// Exact or bracketed value of A(n).
struct ABound {
    Int n = 0;
    Int lower = 0;
    Int upper = 0;
    bool exact = false;
};

namespace detail {

inline Int phi_sum(Int q) {  // sum of phi(l), l = 1..q
    Int s = 0;
    for (Int l = 1; l <= q; ++l) s += totient(l);
    return s;
}

inline Int weighted_phi_sum(Int q) {  // sum of l*phi(l), l = 1..q
    Int s = 0;
    for (Int l = 1; l <= q; ++l) s += l * totient(l);
    return s;
}

}  // namespace detail

inline SaturatedSet s_leq(Int q) {
    if (q < 0) throw std::domain_error("s_leq: negative norm bound");
    return SaturatedSet{q, {}};
}

inline std::vector<DualVector> full_vectors(const SaturatedSet& s) {
    std::vector<DualVector> out;
    for (Int l = 1; l <= s.q; ++l) {
        auto level = primitive_vectors_of_norm(l);
        out.insert(out.end(), level.begin(), level.end());
    }
    out.insert(out.end(), s.extras.begin(), s.extras.end());
    return out;
}

inline bool is_balanced(const SaturatedSet& s) {
    DualVector sum{0, 0};
    for (DualVector v : s.extras) sum = sum + v;
    return sum.is_zero();  // the full levels are closed under cyclic_rotate, so they sum to zero
}

inline Int f0_formula(const SaturatedSet& s) {
    return 3 * detail::phi_sum(s.q) + static_cast<Int>(s.extras.size());
}

inline Rational n_formula(const SaturatedSet& s) {
    return Rational(3 * detail::weighted_phi_sum(s.q) + (s.q + 1) * static_cast<Int>(s.extras.size()), 3);
}

/// The balanced saturated set with 3k elements: decompose
/// k = phi(1) + ... + phi(q) + r with 0 <= r < phi(q+1), take all levels
/// up to q and the first r norm-(q+1) vectors of C~_1 together with their
/// cyclic images.
inline SaturatedSet build_qk(Int k) {
    if (k < 1) throw std::domain_error("build_qk: k must be >= 1");
    Int q = 0, acc = 0;
    while (acc + totient(q + 1) <= k) { ++q; acc += totient(q); }
    const Int r = k - acc;
    SaturatedSet s{q, {}};
    if (r > 0) {
        const auto level = primitive_vectors_of_norm(q + 1);  // C~_1 block first, then rotations
        const Int per_cone = static_cast<Int>(level.size()) / 3;
        for (Int i = 0; i < r; ++i) {
            s.extras.push_back(level[i]);
            s.extras.push_back(level[per_cone + i]);
            s.extras.push_back(level[2 * per_cone + i]);
        }
    }
    return s;
}

/// The unique polytope whose edge-normal configuration is the saturated set.
inline Polytope polytope_of(const SaturatedSet& s) {
    if (!is_balanced(s)) throw std::invalid_argument("polytope_of: saturated set is not balanced");
    return reconstruct(make_configuration(full_vectors(s)));
}

/// Decomposition behind a_bounds: the largest q with sum l*phi(l) <= n,
/// the largest admissible r, and whether n is attained exactly.
struct SaturatedDecomposition {
    Int q = 0;
    Int r = 0;
    bool attained = false;
};

inline SaturatedDecomposition saturated_decomposition(Int n) {
    if (n < 1) throw std::domain_error("saturated_decomposition: n must be >= 1");
    Int q = 0, acc = 0;
    while (acc + (q + 1) * totient(q + 1) <= n) { ++q; acc += q * totient(q); }
    Int r = 0;
    const Int step = q + 1;
    while (r + 1 < totient(q + 1) && acc + (r + 1) * step <= n) ++r;
    return {q, r, acc + r * step == n};
}

/// Exact A(n) when n is hit by the saturated family, otherwise the
/// bracketing bounds.  The strict upper bound of the underlying counting
/// argument is returned as an inclusive integer bound.
inline ABound a_bounds(Int n) {
    const auto d = saturated_decomposition(n);
    const Int base = 3 * detail::phi_sum(d.q) + 3 * d.r;
    if (d.attained) return {n, base, base, true};
    return {n, base, base + 2, false};
}

struct AsymptoticPoint {
    Int q = 0;
    Int f0 = 0;
    Int n = 0;
    Rational ratio;            // f0^3 / n^2, exact
    double relative_deviation = 0.0;  // |ratio / (729 / (4 pi^2)) - 1|
};

/// The ratio f0(P_q)^3 / n(P_q)^2 for the full-level polytope P_q, whose
/// limit is 729/(4 pi^2).
inline AsymptoticPoint asymptotic_ratio(Int q) {
    if (q < 1) throw std::domain_error("asymptotic_ratio: q must be >= 1");
    const Int f0 = 3 * detail::phi_sum(q);
    const Int n = detail::weighted_phi_sum(q);
    const Rational ratio = Rational(f0) * Rational(f0) * Rational(f0) / (Rational(n) * Rational(n));
    const double limit = 729.0 / (4.0 * M_PI * M_PI);
    return {q, f0, n, ratio, std::abs(ratio.to_double() / limit - 1.0)};
}

}  // namespace latmax
