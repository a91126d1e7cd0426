#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <stack>
#include <vector>

#include "degpath/graph.hpp"

namespace degpath {

struct CoreDecomposition {
    std::vector<int> core;   // vertex -> core number
    std::vector<int> order;  // degeneracy elimination order
    int degeneracy = 0;
};

/// Bipartite incidence tree between blocks and cut vertices.
struct BlockTree {
    std::vector<std::vector<int>> blocks;  // sorted vertex sets; bridges are K2 blocks
    std::vector<int> cut_vertices;         // sorted
    // Incidence: block b touches cut vertex c iff c is a member of b.
    std::vector<std::vector<int>> block_cuts;  // block index -> cut vertex ids
    int root = 0;                              // designated root block index

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

/// Minimum-degree peeling with ties broken by lowest vertex id.
inline CoreDecomposition core_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    CoreDecomposition cd;
    cd.core.assign(static_cast<std::size_t>(n), 0);
    cd.order.reserve(static_cast<std::size_t>(n));
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    // Lazy (degree, id) heap: near-linear and gives the deterministic tie rule.
    using Entry = std::pair<int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (int v = 0; v < n; ++v) heap.emplace(deg[static_cast<std::size_t>(v)], v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    int current = 0;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)]) continue;
        removed[static_cast<std::size_t>(v)] = 1;
        current = std::max(current, d);
        cd.core[static_cast<std::size_t>(v)] = current;
        cd.order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            heap.emplace(--deg[static_cast<std::size_t>(u)], u);
        }
    }
    cd.degeneracy = current;
    return cd;
}

inline int degeneracy(const Graph& g) { return core_decomposition(g).degeneracy; }

/// Vertices surviving iterated deletion of degree-< d vertices.
inline std::vector<int> peel_residue(const Graph& g, int d) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] < d) {
            q.push(v);
            removed[static_cast<std::size_t>(v)] = 1;
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            if (--deg[static_cast<std::size_t>(u)] < d) {
                removed[static_cast<std::size_t>(u)] = 1;
                q.push(u);
            }
        }
    }
    std::vector<int> residue;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) residue.push_back(v);
    return residue;
}

namespace detail {

inline std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : verts) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<std::vector<int>> comps;
    for (int s : verts) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!in_set[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
                seen[static_cast<std::size_t>(u)] = 1;
                q.push(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

/// One d-core: the largest component of the iterated-peeling residue, ties
/// broken by smallest contained vertex id. Empty optional iff dg(G) < d.
inline std::optional<std::vector<int>> d_core(const Graph& g, int d) {
    if (d <= 0) throw PreconditionError("d must be positive");
    auto residue = peel_residue(g, d);
    if (residue.empty()) return std::nullopt;
    auto comps = detail::components_within(g, residue);
    const std::vector<int>* best = nullptr;
    for (const auto& c : comps) {
        if (!best || c.size() > best->size() || (c.size() == best->size() && c.front() < best->front()))
            best = &c;
    }
    return *best;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return detail::set_connected(g, all);
}

/// Blocks and cut vertices by one DFS with low-point values. Bridges count
/// as two-vertex blocks. Requires a connected input.
inline BlockTree blocks_and_cuts(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("blocks_and_cuts requires a connected graph");
    const int n = g.vertex_count();
    BlockTree bt;
    if (n == 1) {
        bt.blocks.push_back({0});
        bt.block_cuts.push_back({});
        return bt;
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    // Iterative DFS from vertex 0.
    struct Frame {
        int v;
        std::size_t next_idx;
        int children;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0, 0});
    auto pop_block = [&](int u, int v) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            // Pop until and including (u, v).
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e.first == u && e.second == v) break;
        }
        bt.blocks.emplace_back(verts.begin(), verts.end());
    };
    while (!stack.empty()) {
        Frame& f = stack.back();
        int v = f.v;
        if (f.next_idx < g.neighbors(v).size()) {
            int u = g.neighbors(v)[f.next_idx++];
            if (disc[static_cast<std::size_t>(u)] == -1) {
                parent[static_cast<std::size_t>(u)] = v;
                ++f.children;
                edge_stack.emplace_back(v, u);
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                stack.push_back({u, 0, 0});
            } else if (u != parent[static_cast<std::size_t>(v)] &&
                       disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(v)]) {
                edge_stack.emplace_back(v, u);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[static_cast<std::size_t>(p)] =
                    std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
                    if (parent[static_cast<std::size_t>(p)] != -1) is_cut[static_cast<std::size_t>(p)] = 1;
                    pop_block(p, v);
                }
            }
        }
        if (stack.size() == 1 && stack[0].next_idx >= g.neighbors(stack[0].v).size()) {
            if (stack[0].children >= 2) is_cut[0] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) bt.cut_vertices.push_back(v);
    bt.block_cuts.resize(bt.blocks.size());
    for (std::size_t b = 0; b < bt.blocks.size(); ++b)
        for (int v : bt.blocks[b])
            if (is_cut[static_cast<std::size_t>(v)]) bt.block_cuts[b].push_back(v);
    // Root: the block containing the lowest vertex id, first in DFS pop order.
    for (std::size_t b = 0; b < bt.blocks.size(); ++b) {
        if (std::binary_search(bt.blocks[b].begin(), bt.blocks[b].end(), 0)) {
            bt.root = static_cast<int>(b);
            break;
        }
    }
    return bt;
}

inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    auto bt = blocks_and_cuts(g);
    return bt.blocks.size() == 1 && bt.cut_vertices.empty();
}

/// Distance from the root block to cut vertex c in the block tree (edges of
/// the bipartite incidence tree).
inline int block_tree_distance(const BlockTree& bt, int c) {
    if (!bt.is_cut_vertex(c)) throw PreconditionError("vertex is not a cut vertex");
    // BFS over the bipartite incidence structure. Nodes: blocks then cuts.
    const int nb = static_cast<int>(bt.blocks.size());
    std::vector<int> cut_ids = bt.cut_vertices;
    auto cut_index = [&](int v) {
        return static_cast<int>(std::lower_bound(cut_ids.begin(), cut_ids.end(), v) - cut_ids.begin());
    };
    std::vector<int> dist(static_cast<std::size_t>(nb) + cut_ids.size(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(bt.root)] = 0;
    q.push(bt.root);
    while (!q.empty()) {
        int node = q.front();
        q.pop();
        if (node < nb) {
            for (int cv : bt.block_cuts[static_cast<std::size_t>(node)]) {
                int ci = nb + cut_index(cv);
                if (dist[static_cast<std::size_t>(ci)] == -1) {
                    dist[static_cast<std::size_t>(ci)] = dist[static_cast<std::size_t>(node)] + 1;
                    q.push(ci);
                }
            }
        } else {
            int cv = cut_ids[static_cast<std::size_t>(node - nb)];
            for (int b = 0; b < nb; ++b) {
                if (!std::binary_search(bt.blocks[static_cast<std::size_t>(b)].begin(),
                                        bt.blocks[static_cast<std::size_t>(b)].end(), cv))
                    continue;
                if (dist[static_cast<std::size_t>(b)] == -1) {
                    dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(node)] + 1;
                    q.push(b);
                }
            }
        }
    }
    return dist[static_cast<std::size_t>(nb + cut_index(c))];
}

}  // namespace degpath
