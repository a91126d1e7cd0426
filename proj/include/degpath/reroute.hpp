#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath {

/// Ordered (s_i, t_i) pairs plus the parameter k that scales the degree
/// precondition. s_i = t_i is allowed within a pair; across different pairs
/// all endpoint vertices are distinct, and at least one pair must have
/// s_i != t_i.
struct TerminalPairs {
    std::vector<std::pair<int, int>> pairs;
    int k = 0;
};

namespace detail {

inline void check_terminal_pairs(const Graph& h, const TerminalPairs& tp) {
    const int n = h.vertex_count();
    if (tp.pairs.empty()) throw PreconditionError("at least one terminal pair is required");
    if (tp.k < 1) throw PreconditionError("k must be at least 1");
    if (static_cast<int>(tp.pairs.size()) > tp.k)
        throw PreconditionError("more pairs than k");
    std::set<int> seen;
    bool some_distinct = false;
    for (auto [s, t] : tp.pairs) {
        if (s < 0 || s >= n || t < 0 || t >= n) throw PreconditionError("pair vertex out of range");
        if (!seen.insert(s).second) throw PreconditionError("pair endpoints must be distinct across pairs");
        if (s != t) {
            some_distinct = true;
            if (!seen.insert(t).second)
                throw PreconditionError("pair endpoints must be distinct across pairs");
        }
    }
    if (!some_distinct) throw PreconditionError("at least one pair must have distinct endpoints");
}

/// Phase 1: one path of at most 3 vertices per pair, avoiding previous paths.
inline std::vector<std::vector<int>> reroute_initial_paths(const Graph& h, const TerminalPairs& tp) {
    const int n = h.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<char> is_endpoint(static_cast<std::size_t>(n), 0);
    for (auto [s, t] : tp.pairs) {
        is_endpoint[static_cast<std::size_t>(s)] = 1;
        is_endpoint[static_cast<std::size_t>(t)] = 1;
        used[static_cast<std::size_t>(s)] = 1;
        used[static_cast<std::size_t>(t)] = 1;
    }
    std::vector<std::vector<int>> paths;
    for (auto [s, t] : tp.pairs) {
        if (s == t) {
            paths.push_back({s});
        } else if (h.has_edge(s, t)) {
            paths.push_back({s, t});
        } else {
            int via = -1;
            for (int v = 0; v < n && via < 0; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                if (h.has_edge(s, v) && h.has_edge(t, v)) via = v;
            }
            if (via < 0)
                throw InternalError("no free common neighbour for a non-adjacent pair");
            used[static_cast<std::size_t>(via)] = 1;
            paths.push_back({s, via, t});
        }
    }
    return paths;
}

}  // namespace detail

/// Vertex-disjoint (s_i,t_i)-paths that together cover every vertex of H.
/// Requires min degree >= max{5k-3, n-k}.
inline std::vector<Witness> cover_paths(const Graph& h, const TerminalPairs& tp) {
    detail::check_terminal_pairs(h, tp);
    const int n = h.vertex_count();
    const int delta = h.min_degree();
    const int need_a = 5 * tp.k - 3;
    const int need_b = n - tp.k;
    if (delta < need_a || delta < need_b)
        throw PreconditionError("minimum degree " + std::to_string(delta) + " is below max{5k-3=" +
                                std::to_string(need_a) + ", n-k=" + std::to_string(need_b) + "}");

    auto paths = detail::reroute_initial_paths(h, tp);
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    int covered_count = 0;
    for (const auto& p : paths)
        for (int v : p) {
            if (!covered[static_cast<std::size_t>(v)]) ++covered_count;
            covered[static_cast<std::size_t>(v)] = 1;
        }

    // Phase 2: absorb an uncovered vertex into some path edge. Each round
    // grows the covered count by one, so this terminates.
    while (covered_count < n) {
        bool progressed = false;
        for (auto& p : paths) {
            for (std::size_t i = 0; i + 1 < p.size() && !progressed; ++i) {
                int u = p[i], v = p[i + 1];
                int w = -1;
                for (int cand = 0; cand < n && w < 0; ++cand) {
                    if (covered[static_cast<std::size_t>(cand)]) continue;
                    if (h.has_edge(u, cand) && h.has_edge(v, cand)) w = cand;
                }
                if (w >= 0) {
                    p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
                    covered[static_cast<std::size_t>(w)] = 1;
                    ++covered_count;
                    progressed = true;
                }
            }
            if (progressed) break;
        }
        if (!progressed)
            throw InternalError("no augmenting vertex although uncovered vertices remain");
    }

    std::vector<Witness> out;
    out.reserve(paths.size());
    for (auto& p : paths) {
        Witness w;
        w.kind = Witness::Kind::path;
        w.vertices = std::move(p);
        if (w.vertices.size() > 1 && !verify_witness(h, w))
            throw InternalError("cover path failed verification");
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace degpath
