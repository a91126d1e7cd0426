#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath::detail {

// Exact longest path / cycle / (s,t)-path by DP over (vertex subset,
// endpoint) states. Intended for n <= ~20; callers gate the size.

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= (1u << u);
    return adj;
}

// reach[mask] = endpoints v of simple paths with vertex set == mask.
// If anchor >= 0, paths must start at `anchor` and masks must contain it.
inline std::vector<std::uint32_t> path_reach(const Graph& g, const std::vector<std::uint32_t>& adj,
                                             int anchor) {
    const int n = g.vertex_count();
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::uint32_t> reach(full, 0);
    if (anchor >= 0) {
        reach[std::size_t{1} << anchor] = 1u << anchor;
    } else {
        for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
    }
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                reach[mask | (std::size_t{1} << u)] |= 1u << u;
            }
        }
    }
    return reach;
}

inline std::vector<int> backtrack_path(const std::vector<std::uint32_t>& reach,
                                       const std::vector<std::uint32_t>& adj, std::uint32_t mask,
                                       int last) {
    std::vector<int> path;
    while (true) {
        path.push_back(last);
        std::uint32_t rest = mask & ~(1u << last);
        if (!rest) break;
        std::uint32_t prevs = reach[rest] & adj[static_cast<std::size_t>(last)];
        last = std::countr_zero(prevs);  // some predecessor exists by construction
        mask = rest;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline Witness exact_longest_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw PreconditionError("empty graph has no path");
    auto adj = adjacency_masks(g);
    auto reach = path_reach(g, adj, -1);
    std::uint32_t best_mask = 1;
    int best_last = std::countr_zero(reach[1]);
    int best_size = 1;
    const std::size_t full = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!reach[mask]) continue;
        int sz = std::popcount(mask);
        if (sz > best_size) {
            best_size = sz;
            best_mask = static_cast<std::uint32_t>(mask);
            best_last = std::countr_zero(reach[mask]);
        }
    }
    Witness w;
    w.kind = Witness::Kind::path;
    w.vertices = backtrack_path(reach, adj, best_mask, best_last);
    return w;
}

inline std::optional<Witness> exact_longest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    auto adj = adjacency_masks(g);
    // Anchor every subset at its lowest vertex: each cycle is found from the
    // subset it spans.
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::uint32_t> reach(full, 0);
    for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1u << v;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        int anchor = std::countr_zero(static_cast<std::uint32_t>(mask));
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
            // Never extend below the anchor: subsets keep their lowest vertex.
            ext &= ~((1u << anchor) - 1);
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                reach[mask | (std::size_t{1} << u)] |= 1u << u;
            }
        }
    }
    int best_size = 0;
    std::uint32_t best_mask = 0;
    int best_last = -1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        int sz = std::popcount(mask);
        if (sz < 3 || sz <= best_size) continue;
        int anchor = std::countr_zero(static_cast<std::uint32_t>(mask));
        std::uint32_t closing = ends & adj[static_cast<std::size_t>(anchor)];
        if (closing) {
            best_size = sz;
            best_mask = static_cast<std::uint32_t>(mask);
            best_last = std::countr_zero(closing);
        }
    }
    if (best_size == 0) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::cycle;
    w.vertices = backtrack_path(reach, adj, best_mask, best_last);
    return w;
}

/// Longest (s,t)-path; nullopt if t is unreachable from s.
inline std::optional<Witness> exact_longest_st_path(const Graph& g, int s, int t) {
    if (s == t) throw PreconditionError("s and t must be distinct");
    auto adj = adjacency_masks(g);
    auto reach = path_reach(g, adj, s);
    const std::size_t full = std::size_t{1} << g.vertex_count();
    int best_size = 0;
    std::uint32_t best_mask = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!(reach[mask] & (1u << t))) continue;
        int sz = std::popcount(mask);
        if (sz > best_size) {
            best_size = sz;
            best_mask = static_cast<std::uint32_t>(mask);
        }
    }
    if (best_size == 0) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::path;
    w.vertices = backtrack_path(reach, adj, best_mask, t);
    return w;
}

}  // namespace degpath::detail
