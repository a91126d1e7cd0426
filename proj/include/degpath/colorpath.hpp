#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "degpath/graph.hpp"
#include "degpath/rng.hpp"
#include "degpath/subset_dp.hpp"

namespace degpath {

/// One random q-coloring, reproducible from (seed, trial).
struct Coloring {
    int q = 0;
    std::vector<int> color;  // vertex -> 1..q
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

inline Coloring random_coloring(int n, int q, std::uint64_t seed, std::uint64_t trial) {
    if (q < 1) throw PreconditionError("color count must be positive");
    Coloring c;
    c.q = q;
    c.seed = seed;
    c.trial = trial;
    c.color.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        c.color[static_cast<std::size_t>(v)] =
            1 + static_cast<int>(trial_draw(seed, trial, static_cast<std::uint64_t>(v)) %
                                 static_cast<std::uint64_t>(q));
    return c;
}

struct TrialBudget {
    long long trials = 0;  // 0 = use the per-operation default formula
    std::uint64_t seed = 0;
    // Instances with at most this many vertices are solved exactly instead of
    // by random trials; 0 forces the Monte-Carlo path.
    int exact_threshold = 18;
};

inline long long default_color_trials(int q) {
    double raw = std::ceil(std::exp(static_cast<double>(q)));
    if (!(raw < 1e6)) return 1000000;
    return std::max(1LL, static_cast<long long>(raw));
}

struct SearchResult {
    std::optional<Witness> witness;
    long long trials_used = 0;
};

namespace detail {

inline constexpr int kMaxColorTarget = 20;

// Fixed-width dynamic bitset over vertices.
struct VertexBits {
    std::vector<std::uint64_t> w;
    explicit VertexBits(int n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
};

// Colorful-path DP: reach[X] = vertices v such that some path whose vertices
// use exactly the (pairwise distinct) colors in X ends at v. Colors 0-based
// here. anchor >= 0 restricts start vertices; accept_only >= 0 restricts the
// accepted final endpoint; require_edge_to >= 0 additionally demands an edge
// from the final endpoint back to that vertex.
inline std::optional<std::vector<int>> colorful_path(const Graph& g, const std::vector<int>& col,
                                                     int q, int anchor, int accept_only,
                                                     int require_edge_to,
                                                     std::vector<VertexBits>& reach) {
    const int n = g.vertex_count();
    const std::uint32_t full = (q == 32) ? ~0u : ((1u << q) - 1);
    for (auto& b : reach) std::fill(b.w.begin(), b.w.end(), 0);
    if (anchor >= 0) {
        reach[1u << col[static_cast<std::size_t>(anchor)]].set(anchor);
    } else {
        for (int v = 0; v < n; ++v) reach[1u << col[static_cast<std::size_t>(v)]].set(v);
    }
    for (std::uint32_t X = 1; X <= full; ++X) {
        const VertexBits& cur = reach[X];
        for (std::size_t blk = 0; blk < cur.w.size(); ++blk) {
            std::uint64_t bits = cur.w[blk];
            while (bits) {
                int v = static_cast<int>(blk) * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                for (int u : g.neighbors(v)) {
                    std::uint32_t cb = 1u << col[static_cast<std::size_t>(u)];
                    if (!(X & cb)) reach[X | cb].set(u);
                }
            }
        }
    }
    // Pick an accepted endpoint.
    int last = -1;
    const VertexBits& fin = reach[full];
    if (accept_only >= 0) {
        if (fin.test(accept_only)) last = accept_only;
    } else {
        for (std::size_t blk = 0; blk < fin.w.size() && last < 0; ++blk) {
            std::uint64_t bits = fin.w[blk];
            while (bits) {
                int v = static_cast<int>(blk) * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (require_edge_to < 0 || g.has_edge(v, require_edge_to)) {
                    last = v;
                    break;
                }
            }
        }
    }
    if (last < 0) return std::nullopt;
    std::vector<int> path;
    std::uint32_t X = full;
    while (true) {
        path.push_back(last);
        X &= ~(1u << col[static_cast<std::size_t>(last)]);
        if (X == 0) break;
        int prev = -1;
        for (int u : g.neighbors(last)) {
            if ((X >> col[static_cast<std::size_t>(u)]) & 1) {
                if (reach[X].test(u)) {
                    prev = u;
                    break;
                }
            }
        }
        if (prev < 0) throw InternalError("colorful path backtracking lost its predecessor");
        last = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::vector<int> zero_based(const Coloring& c) {
    std::vector<int> col(c.color.size());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = c.color[i] - 1;
    return col;
}

inline void check_color_target(int q) {
    if (q > kMaxColorTarget)
        throw PreconditionError("target length exceeds the color-coding table limit (20)");
}

}  // namespace detail

/// Path with at least q vertices, or none found within the budget.
inline SearchResult longest_path_at_least(const Graph& g, int q, const TrialBudget& budget) {
    if (q < 1) throw PreconditionError("q must be at least 1");
    const int n = g.vertex_count();
    SearchResult res;
    if (q > n) return res;
    if (n <= budget.exact_threshold) {
        Witness w = detail::exact_longest_path(g);
        if (static_cast<int>(w.vertices.size()) >= q) res.witness = std::move(w);
        return res;
    }
    detail::check_color_target(q);
    const long long trials = budget.trials > 0 ? budget.trials : default_color_trials(q);
    std::vector<detail::VertexBits> reach(std::size_t{1} << q, detail::VertexBits(n));
    for (long long t = 0; t < trials; ++t) {
        ++res.trials_used;
        Coloring c = random_coloring(n, q, budget.seed, static_cast<std::uint64_t>(t));
        auto col = detail::zero_based(c);
        auto path = detail::colorful_path(g, col, q, -1, -1, -1, reach);
        if (path) {
            Witness w;
            w.kind = Witness::Kind::path;
            w.vertices = std::move(*path);
            if (!verify_witness(g, w) || static_cast<int>(w.vertices.size()) < q)
                throw InternalError("color-coding produced an invalid path");
            res.witness = std::move(w);
            return res;
        }
    }
    return res;
}

/// Cycle with at least q vertices, or none found within the budget.
inline SearchResult longest_cycle_at_least(const Graph& g, int q, const TrialBudget& budget) {
    if (q < 3) throw PreconditionError("q must be at least 3");
    const int n = g.vertex_count();
    SearchResult res;
    if (q > n) return res;
    if (n <= budget.exact_threshold) {
        auto w = detail::exact_longest_cycle(g);
        if (w && static_cast<int>(w->vertices.size()) >= q) res.witness = std::move(*w);
        return res;
    }
    // The colorful DP finds cycles of an exact length, so sweep targets from
    // q upward; a long cycle need not contain a shorter one.
    for (int L = q; L <= n; ++L) {
        detail::check_color_target(L);
        const long long trials = budget.trials > 0 ? budget.trials : default_color_trials(L);
        std::vector<detail::VertexBits> reach(std::size_t{1} << L, detail::VertexBits(n));
        for (long long t = 0; t < trials; ++t) {
            ++res.trials_used;
            Coloring c = random_coloring(n, L, budget.seed, static_cast<std::uint64_t>(t));
            auto col = detail::zero_based(c);
            for (int a = 0; a < n; ++a) {
                if (col[static_cast<std::size_t>(a)] != 0) continue;  // anchor color class
                auto path = detail::colorful_path(g, col, L, a, -1, a, reach);
                if (!path) continue;
                Witness w;
                w.kind = Witness::Kind::cycle;
                w.vertices = std::move(*path);
                if (!verify_witness(g, w) || static_cast<int>(w.vertices.size()) < q)
                    throw InternalError("color-coding produced an invalid cycle");
                res.witness = std::move(w);
                return res;
            }
        }
    }
    return res;
}

/// (s,t)-path with at least q vertices, or none found within the budget.
inline SearchResult st_path_at_least(const Graph& g, int s, int t, int q,
                                     const TrialBudget& budget) {
    if (s == t) throw PreconditionError("s and t must be distinct");
    if (q < 1) throw PreconditionError("q must be at least 1");
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) throw PreconditionError("terminal out of range");
    SearchResult res;
    if (q > n) return res;
    if (n <= budget.exact_threshold) {
        auto w = detail::exact_longest_st_path(g, s, t);
        if (w && static_cast<int>(w->vertices.size()) >= q) res.witness = std::move(*w);
        return res;
    }
    for (int L = std::max(q, 2); L <= n; ++L) {
        detail::check_color_target(L);
        const long long trials = budget.trials > 0 ? budget.trials : default_color_trials(L);
        std::vector<detail::VertexBits> reach(std::size_t{1} << L, detail::VertexBits(n));
        for (long long tr = 0; tr < trials; ++tr) {
            ++res.trials_used;
            Coloring c = random_coloring(n, L, budget.seed, static_cast<std::uint64_t>(tr));
            auto col = detail::zero_based(c);
            auto path = detail::colorful_path(g, col, L, s, t, -1, reach);
            if (!path) continue;
            Witness w;
            w.kind = Witness::Kind::path;
            w.vertices = std::move(*path);
            if (!verify_witness(g, w) || w.vertices.front() != s || w.vertices.back() != t ||
                static_cast<int>(w.vertices.size()) < q)
                throw InternalError("color-coding produced an invalid (s,t)-path");
            res.witness = std::move(w);
            return res;
        }
    }
    return res;
}

}  // namespace degpath
