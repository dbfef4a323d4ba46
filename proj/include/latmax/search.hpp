// Exhaustive search for A(n), the maximal vertex count of a lattice
// polygon inside the n-th dilate of the unimodular triangle.
//
// The polytope/configuration correspondence turns the question into pure
// dual-lattice combinatorics: a polygon with f0 vertices inside n*Delta is
// a balanced configuration of f0 dual vectors with pairwise distinct
// directions and total asymmetric norm at most 3n.  The search therefore
// runs depth-first over primitive directions ordered by norm, choosing an
// integer multiplicity per direction (elements need not be primitive;
// forcing primitivity would break balance).  State is (direction index,
// remaining norm budget, running vector sum, count).
//
// Pruning rules:
//   (a) closing bound  - the remaining vectors must sum to -sum, so by the
//       triangle inequality norm(-sum) must fit into the remaining budget;
//   (b) counting bound - each further direction costs at least its norm,
//       so the affordable count is bounded by greedily buying the cheapest
//       remaining norms; prune when that cannot beat the incumbent;
//   (c) incumbent seed - the saturated family provides an attained lower
//       bound before the search starts.
//
// Results are exact or explicitly inconclusive, never silently wrong.  The
// value search may fan out over top-level branches with a shared atomic
// incumbent; the canonical witness is then extracted by a deterministic
// sequential pass, so (a_of_n, witness) never depend on the thread count.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "lattice.hpp"
#include "polytope.hpp"
#include "saturated.hpp"

namespace latmax {

struct SearchLimits {
    Int max_nodes = 500'000'000;
    double max_seconds = 300.0;
    int threads = 1;
    // Test hooks: disabling a rule must never change the result, only node counts.
    bool use_closing_bound = true;
    bool use_counting_bound = true;
    bool use_incumbent_seed = true;
};

enum class SearchStatus { Exact, Inconclusive };

struct SearchResult {
    Int n = 0;
    Int a_of_n = 0;
    VectorConfiguration witness;
    Int nodes = 0;
    double ms = 0.0;
    SearchStatus status = SearchStatus::Exact;
    bool witness_primitive_only = false;
};

/// Primitive directions of norm <= max_norm, norm-ascending and in the
/// canonical per-level order, with prefix sums of norms for bound (b).
struct DirectionTable {
    struct Entry {
        DualVector v;
        Int norm = 0;
    };
    std::vector<Entry> entries;
    std::vector<Int> prefix;  // prefix[i] = sum of the first i norms

    /// Largest t such that the t cheapest directions from index idx on
    /// cost at most budget.
    Int affordable(std::size_t idx, Int budget) const {
        const auto it = std::upper_bound(prefix.begin() + static_cast<std::ptrdiff_t>(idx),
                                         prefix.end(), prefix[idx] + budget);
        return static_cast<Int>(it - prefix.begin()) - static_cast<Int>(idx) - 1;
    }
};

inline DirectionTable direction_table(Int max_norm) {
    DirectionTable t;
    for (Int l = 1; l <= max_norm; ++l)
        for (DualVector v : primitive_vectors_of_norm(l)) t.entries.push_back({v, l});
    t.prefix.resize(t.entries.size() + 1, 0);
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        t.prefix[i + 1] = t.prefix[i] + t.entries[i].norm;
    return t;
}

namespace detail {

struct SearchClock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double deadline_seconds = 0.0;
    bool expired() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               deadline_seconds;
    }
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// One depth-first exploration context.  `mult[i]` is the multiplicity
// chosen for table entry i on the current path.
struct SearchContext {
    const DirectionTable& table;
    const SearchLimits& limits;
    const SearchClock& clock;
    std::atomic<Int>& best;        // shared incumbent value
    std::atomic<bool>& aborted;    // any limit breached anywhere
    std::atomic<Int>& node_pool;   // global node budget, decremented in batches

    std::vector<Int> mult;
    Int local_nodes = 0;
    Int allowance = 0;  // nodes already claimed from the shared pool
    Int best_value_seen = -1;
    std::vector<DualVector> best_selection;  // incumbent witness for inconclusive reporting

    explicit SearchContext(const DirectionTable& t, const SearchLimits& l, const SearchClock& c,
                           std::atomic<Int>& b, std::atomic<bool>& a, std::atomic<Int>& pool)
        : table(t), limits(l), clock(c), best(b), aborted(a), node_pool(pool),
          mult(t.entries.size(), 0) {}

    bool tick() {
        ++local_nodes;
        if (--allowance < 0) {
            const Int chunk = std::clamp<Int>(limits.max_nodes / 8, 16, 4096);
            if (node_pool.fetch_sub(chunk, std::memory_order_relaxed) <= 0 || clock.expired())
                aborted.store(true, std::memory_order_relaxed);
            allowance = chunk;
        }
        return !aborted.load(std::memory_order_relaxed);
    }

    std::vector<DualVector> selection() const {
        std::vector<DualVector> out;
        for (std::size_t i = 0; i < mult.size(); ++i)
            if (mult[i] > 0) out.push_back(mult[i] * table.entries[i].v);
        return out;
    }

    void record(Int count) {
        Int cur = best.load(std::memory_order_relaxed);
        while (count > cur && !best.compare_exchange_weak(cur, count, std::memory_order_relaxed)) {
        }
        if (count > best_value_seen) {
            best_value_seen = count;
            best_selection = selection();
        }
    }

    void dfs_value(std::size_t idx, Int budget, DualVector sum, Int count) {
        if (!tick()) return;
        if (sum.is_zero()) record(count);
        if (idx == table.entries.size()) return;
        if (limits.use_closing_bound && asymmetric_norm(-sum) > budget) return;
        if (limits.use_counting_bound &&
            count + table.affordable(idx, budget) <= best.load(std::memory_order_relaxed))
            return;
        const Int norm = table.entries[idx].norm;
        if (budget < norm) return;  // nothing further is affordable; state cannot change
        const DualVector v = table.entries[idx].v;
        for (Int m = 0; m * norm <= budget; ++m) {
            mult[idx] = m;
            dfs_value(idx + 1, budget - m * norm, sum + m * v, count + (m > 0 ? 1 : 0));
            if (aborted.load(std::memory_order_relaxed)) break;
        }
        mult[idx] = 0;
    }

    // First balanced selection of exactly `target` directions in canonical
    // depth-first order; bound (b) keeps ties, so the walk is short.
    bool dfs_witness(std::size_t idx, Int budget, DualVector sum, Int count, Int target) {
        if (!tick()) return false;
        if (sum.is_zero() && count == target) return true;
        if (idx == table.entries.size()) return false;
        if (limits.use_closing_bound && asymmetric_norm(-sum) > budget) return false;
        if (count + table.affordable(idx, budget) < target) return false;
        const Int norm = table.entries[idx].norm;
        if (budget < norm) return false;
        const DualVector v = table.entries[idx].v;
        for (Int m = 0; m * norm <= budget; ++m) {
            mult[idx] = m;
            if (dfs_witness(idx + 1, budget - m * norm, sum + m * v, count + (m > 0 ? 1 : 0),
                            target))
                return true;
            if (aborted.load(std::memory_order_relaxed)) break;
        }
        mult[idx] = 0;
        return false;
    }

    void dfs_enumerate(std::size_t idx, Int budget, DualVector sum, Int count, Int target,
                       std::vector<std::vector<DualVector>>& out) {
        if (!tick()) return;
        const Int norm = idx < table.entries.size() ? table.entries[idx].norm : 0;
        if (idx == table.entries.size() || budget < norm) {
            // All remaining multiplicities are forced to zero.
            if (sum.is_zero() && count == target) out.push_back(selection());
            return;
        }
        if (limits.use_closing_bound && asymmetric_norm(-sum) > budget) return;
        if (count + table.affordable(idx, budget) < target) return;
        const DualVector v = table.entries[idx].v;
        for (Int m = 0; m * norm <= budget; ++m) {
            mult[idx] = m;
            dfs_enumerate(idx + 1, budget - m * norm, sum + m * v, count + (m > 0 ? 1 : 0),
                          target, out);
            if (aborted.load(std::memory_order_relaxed)) break;
        }
        mult[idx] = 0;
    }
};

// Saturated-family witness attaining a_bounds(n).lower: all levels up to q
// plus r balanced cyclic triples of norm q+1.
inline VectorConfiguration seed_witness(Int n) {
    const auto d = saturated_decomposition(n);
    SaturatedSet s{d.q, {}};
    if (d.r > 0) {
        const auto level = primitive_vectors_of_norm(d.q + 1);
        const Int per_cone = static_cast<Int>(level.size()) / 3;
        for (Int i = 0; i < d.r; ++i) {
            s.extras.push_back(level[i]);
            s.extras.push_back(level[per_cone + i]);
            s.extras.push_back(level[2 * per_cone + i]);
        }
    }
    return make_configuration(full_vectors(s));
}

}  // namespace detail

/// Exact A(n) by branch and bound over balanced dual-vector configurations
/// with norm budget 3n.
inline SearchResult max_vertices_branch_and_bound(Int n, const SearchLimits& limits = {}) {
    if (n < 1) throw std::domain_error("max_vertices_branch_and_bound: n must be >= 1");
    const detail::SearchClock clock{std::chrono::steady_clock::now(), limits.max_seconds};
    const DirectionTable table = direction_table(3 * n);
    const Int budget = 3 * n;

    std::atomic<Int> best{0};
    std::atomic<bool> aborted{false};
    std::atomic<Int> node_pool{limits.max_nodes};
    const VectorConfiguration seed = detail::seed_witness(n);
    if (limits.use_incumbent_seed) best.store(static_cast<Int>(seed.size()));

    Int nodes = 0;
    Int incumbent_value = static_cast<Int>(seed.size());
    std::vector<DualVector> incumbent_selection(seed.vectors);
    const Int norm0 = table.entries.front().norm;
    const DualVector v0 = table.entries.front().v;
    const Int top_branches = budget / norm0 + 1;  // multiplicity of the first direction
    const int threads =
        std::max(1, std::min<int>(limits.threads, static_cast<int>(top_branches)));

    if (threads == 1) {
        detail::SearchContext ctx(table, limits, clock, best, aborted, node_pool);
        ctx.dfs_value(0, budget, {0, 0}, 0);
        nodes = ctx.local_nodes;
        if (ctx.best_value_seen > incumbent_value) {
            incumbent_value = ctx.best_value_seen;
            incumbent_selection = ctx.best_selection;
        }
    } else {
        std::atomic<Int> next_task{0};
        std::atomic<Int> total_nodes{0};
        std::mutex incumbent_mutex;
        auto worker = [&] {
            detail::SearchContext ctx(table, limits, clock, best, aborted, node_pool);
            for (Int task = next_task.fetch_add(1); task < top_branches;
                 task = next_task.fetch_add(1)) {
                const Int m0 = task;
                ctx.mult[0] = m0;
                ctx.dfs_value(1, budget - m0 * norm0, m0 * v0, m0 > 0 ? 1 : 0);
                ctx.mult[0] = 0;
                if (aborted.load(std::memory_order_relaxed)) break;
            }
            total_nodes.fetch_add(ctx.local_nodes);
            const std::scoped_lock lock(incumbent_mutex);
            if (ctx.best_value_seen > incumbent_value) {
                incumbent_value = ctx.best_value_seen;
                incumbent_selection = ctx.best_selection;
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        nodes = total_nodes.load();
    }

    SearchResult result;
    result.n = n;
    result.a_of_n = std::max(best.load(), incumbent_value);
    result.nodes = nodes;

    if (aborted.load()) {
        result.status = SearchStatus::Inconclusive;
        result.a_of_n = incumbent_value;  // only the incumbent is certified
        result.witness = make_configuration(std::move(incumbent_selection));
    } else {
        result.status = SearchStatus::Exact;
        detail::SearchContext ctx(table, limits, clock, best, aborted, node_pool);
        const bool found = ctx.dfs_witness(0, budget, {0, 0}, 0, result.a_of_n);
        result.nodes += ctx.local_nodes;
        if (!found || aborted.load()) {
            result.status = SearchStatus::Inconclusive;
            result.witness = make_configuration(std::move(incumbent_selection));
        } else {
            result.witness = make_configuration(ctx.selection());
        }
    }
    result.witness_primitive_only =
        std::all_of(result.witness.vectors.begin(), result.witness.vectors.end(),
                    [](DualVector v) { return is_primitive(v); });
    result.ms = clock.elapsed_ms();
    return result;
}

/// Independent cross-oracle for small n: enumerate every subset of the
/// lattice points of n*Delta, take hulls, and maximize the vertex count.
inline SearchResult max_vertices_geometric(Int n) {
    if (n < 1 || n > 5)
        throw std::out_of_range("max_vertices_geometric: supported range is 1 <= n <= 5");
    const detail::SearchClock clock{std::chrono::steady_clock::now(), 0.0};
    std::vector<LatticePoint> lattice;
    for (Int x = 0; x <= n; ++x)
        for (Int y = 0; y + x <= n; ++y) lattice.push_back({x, y});
    std::sort(lattice.begin(), lattice.end());
    const unsigned count = static_cast<unsigned>(lattice.size());

    std::size_t best = 0;
    std::uint32_t best_mask = 0;
    std::vector<LatticePoint> subset, hull;
    subset.reserve(count);
    hull.reserve(2 * count);
    for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) <= best) continue;
        subset.clear();
        for (unsigned i = 0; i < count; ++i)
            if (mask >> i & 1u) subset.push_back(lattice[i]);  // stays lexicographically sorted
        // inline monotone chain over the presorted subset
        hull.clear();
        std::size_t k = 0;
        for (const auto& pt : subset) {
            while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) { hull.pop_back(); --k; }
            hull.push_back(pt);
            ++k;
        }
        const std::size_t lower = k + 1;
        for (std::size_t i = subset.size() - 1; i-- > 0;) {
            while (k >= lower && cross(hull[k - 2], hull[k - 1], subset[i]) <= 0) {
                hull.pop_back();
                --k;
            }
            hull.push_back(subset[i]);
            ++k;
        }
        const std::size_t f0 = subset.size() == 1 ? 1 : k - 1;
        if (f0 > best) { best = f0; best_mask = mask; }
    }

    std::vector<LatticePoint> witness_pts;
    for (unsigned i = 0; i < count; ++i)
        if (best_mask >> i & 1u) witness_pts.push_back(lattice[i]);
    const Polytope witness = convex_hull(witness_pts);

    SearchResult result;
    result.n = n;
    result.a_of_n = static_cast<Int>(best);
    result.witness = d_map(witness);
    result.nodes = static_cast<Int>((1u << count) - 1);
    result.status = SearchStatus::Exact;
    result.witness_primitive_only =
        std::all_of(result.witness.vectors.begin(), result.witness.vectors.end(),
                    [](DualVector v) { return is_primitive(v); });
    result.ms = clock.elapsed_ms();
    return result;
}

struct EnumerationResult {
    Int n = 0;
    Int a_of_n = 0;
    std::vector<VectorConfiguration> configs;
    SearchStatus status = SearchStatus::Exact;
    Int nodes = 0;
};

/// All balanced configurations attaining A(n) within budget 3n,
/// deduplicated by canonical form.
inline EnumerationResult enumerate_maximal(Int n, const SearchLimits& limits = {}) {
    const SearchResult value = max_vertices_branch_and_bound(n, limits);
    EnumerationResult result;
    result.n = n;
    result.a_of_n = value.a_of_n;
    result.nodes = value.nodes;
    if (value.status == SearchStatus::Inconclusive) {
        result.status = SearchStatus::Inconclusive;
        return result;
    }
    const detail::SearchClock clock{std::chrono::steady_clock::now(), limits.max_seconds};
    const DirectionTable table = direction_table(3 * n);
    std::atomic<Int> best{0};
    std::atomic<bool> aborted{false};
    std::atomic<Int> node_pool{limits.max_nodes};
    detail::SearchContext ctx(table, limits, clock, best, aborted, node_pool);
    std::vector<std::vector<DualVector>> raw;
    ctx.dfs_enumerate(0, 3 * n, {0, 0}, 0, value.a_of_n, raw);
    result.nodes += ctx.local_nodes;
    if (aborted.load()) {
        result.status = SearchStatus::Inconclusive;
        return result;
    }
    for (auto& sel : raw) result.configs.push_back(make_configuration(std::move(sel)));
    std::sort(result.configs.begin(), result.configs.end(),
              [](const VectorConfiguration& a, const VectorConfiguration& b) {
                  return a.vectors < b.vectors;
              });
    result.configs.erase(std::unique(result.configs.begin(), result.configs.end()),
                         result.configs.end());
    return result;
}

struct MinNormSumResult {
    Int k = 0;
    Int value = 0;
    SearchStatus status = SearchStatus::Exact;
    Int nodes = 0;
};

/// Minimum of the summed norms over all k-element configurations, balance
/// not required.  Multiplicities above one are dominated for a minimum and
/// are skipped; otherwise this is the same engine without the balance
/// constraint.
inline MinNormSumResult minimum_norm_sum(Int k, const SearchLimits& limits = {}) {
    if (k < 1) throw std::domain_error("minimum_norm_sum: k must be >= 1");
    const detail::SearchClock clock{std::chrono::steady_clock::now(), limits.max_seconds};
    const DirectionTable table = direction_table(k);
    const Int size = static_cast<Int>(table.entries.size());
    Int best = table.prefix.back() + 1;  // above any attainable sum
    Int nodes = 0;
    bool aborted = false;

    auto dfs = [&](auto&& self, Int idx, Int count, Int acc) -> void {
        if (aborted) return;
        if (++nodes > limits.max_nodes || (nodes % 8192 == 0 && clock.expired())) {
            aborted = true;
            return;
        }
        if (count == k) {
            best = std::min(best, acc);
            return;
        }
        if (size - idx < k - count) return;
        // cheapest possible completion from here
        if (acc + (table.prefix[idx + (k - count)] - table.prefix[idx]) >= best) return;
        self(self, idx + 1, count + 1, acc + table.entries[idx].norm);  // take
        self(self, idx + 1, count, acc);                                // skip
    };
    dfs(dfs, 0, 0, 0);

    MinNormSumResult result;
    result.k = k;
    result.value = best;
    result.nodes = nodes;
    result.status = aborted ? SearchStatus::Inconclusive : SearchStatus::Exact;
    return result;
}

}  // namespace latmax
