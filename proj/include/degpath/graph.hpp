#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degpath/errors.hpp"

namespace degpath {

/// Immutable undirected simple graph over vertices 0..n-1 with sorted
/// adjacency lists. Safe to share across threads once constructed.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw PreconditionError("vertex count must be non-negative");
        Graph g;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw FormatError("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
            if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto& nb = g.adj_[static_cast<std::size_t>(v)];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw FormatError("duplicate edge incident to vertex " + std::to_string(v));
        }
        g.m_ = static_cast<long>(edges.size());
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int min_degree() const {
        int d = vertex_count() == 0 ? 0 : degree(0);
        for (int v = 1; v < vertex_count(); ++v) d = std::min(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    std::vector<std::vector<int>> adj_;
    long m_ = 0;
};

struct Witness {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    std::vector<int> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
};

/// Maps vertices of an original graph onto the vertices ("blobs") of one of
/// its contractions. Blobs partition V(G) and each induces a connected set.
struct ContractionMap {
    std::vector<int> blob_of;               // original vertex -> blob id
    std::vector<std::vector<int>> members;  // blob id -> sorted original vertices
};

/// Parses the edge-list text format: '#' comment lines, optional "p <n> <m>"
/// header, one "u v" edge per line. Duplicate edges (in either order) and
/// self-loops are rejected.
inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long header_n = -1, header_m = -1;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    int lineno = 0;
    auto parse_int = [&](const std::string& tok) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw FormatError("line " + std::to_string(lineno) + ": non-integer token '" + tok + "'");
        }
        if (pos != tok.size())
            throw FormatError("line " + std::to_string(lineno) + ": non-integer token '" + tok + "'");
        if (value < 0)
            throw FormatError("line " + std::to_string(lineno) + ": negative vertex id");
        return static_cast<int>(value);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (header_n >= 0) throw FormatError("line " + std::to_string(lineno) + ": repeated header");
            if (toks.size() != 3) throw FormatError("line " + std::to_string(lineno) + ": header must be 'p <n> <m>'");
            header_n = parse_int(toks[1]);
            header_m = parse_int(toks[2]);
            continue;
        }
        if (toks.size() != 2)
            throw FormatError("line " + std::to_string(lineno) + ": expected 'u v'");
        int u = parse_int(toks[0]);
        int v = parse_int(toks[1]);
        if (u == v) throw FormatError("line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = header_n >= 0 ? static_cast<int>(header_n) : max_vertex + 1;
    if (max_vertex >= n) throw FormatError("edge endpoint exceeds header vertex count");
    if (header_m >= 0 && header_m != static_cast<long>(edges.size()))
        throw FormatError("header edge count does not match body");
    // Duplicate detection across orderings.
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        throw FormatError("duplicate edge");
    return Graph::from_edges(n, edges);
}

/// Canonical edge-list serialization: header plus sorted "u v" lines, u < v.
inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

/// True iff w is a simple path (or cycle of length >= 3) in g.
inline bool verify_witness(const Graph& g, const Witness& w) {
    const auto& vs = w.vertices;
    if (vs.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    if (w.kind == Witness::Kind::cycle) {
        if (vs.size() < 3) return false;
        if (!g.has_edge(vs.back(), vs.front())) return false;
    }
    return true;
}

namespace detail {

// BFS path between two vertices inside an allowed vertex set. Returns the
// vertex sequence from `from` to `to`, or empty if unreachable.
inline std::vector<int> bfs_path_within(const Graph& g, int from, int to,
                                        const std::vector<char>& allowed) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(from);
    seen[static_cast<std::size_t>(from)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) break;
        for (int u : g.neighbors(v)) {
            if (!allowed[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
            seen[static_cast<std::size_t>(u)] = 1;
            parent[static_cast<std::size_t>(u)] = v;
            q.push(u);
        }
    }
    if (!seen[static_cast<std::size_t>(to)]) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

inline bool set_connected(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : verts) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(verts[0]);
    seen[static_cast<std::size_t>(verts[0])] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (!in_set[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
            seen[static_cast<std::size_t>(u)] = 1;
            ++reached;
            q.push(u);
        }
    }
    return reached == verts.size();
}

}  // namespace detail

/// Contracts each group to a single vertex. Uncovered vertices become
/// singleton blobs. Blob ids are assigned by increasing minimum member.
inline std::pair<Graph, ContractionMap> contract(const Graph& g,
                                                 const std::vector<std::vector<int>>& groups) {
    const int n = g.vertex_count();
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (groups[gi].empty()) throw PreconditionError("empty contraction group");
        for (int v : groups[gi]) {
            if (v < 0 || v >= n) throw PreconditionError("group vertex out of range");
            if (group_of[static_cast<std::size_t>(v)] != -1)
                throw PreconditionError("contraction groups are not disjoint");
            group_of[static_cast<std::size_t>(v)] = static_cast<int>(gi);
        }
        if (!detail::set_connected(g, groups[gi]))
            throw PreconditionError("contraction group does not induce a connected subgraph");
    }
    ContractionMap map;
    map.blob_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> blob_of_group(groups.size(), -1);
    for (int v = 0; v < n; ++v) {
        if (map.blob_of[static_cast<std::size_t>(v)] != -1) continue;
        int gi = group_of[static_cast<std::size_t>(v)];
        int blob = static_cast<int>(map.members.size());
        if (gi == -1) {
            map.members.push_back({v});
            map.blob_of[static_cast<std::size_t>(v)] = blob;
        } else {
            std::vector<int> mem = groups[static_cast<std::size_t>(gi)];
            std::sort(mem.begin(), mem.end());
            for (int u : mem) map.blob_of[static_cast<std::size_t>(u)] = blob;
            map.members.push_back(std::move(mem));
            blob_of_group[static_cast<std::size_t>(gi)] = blob;
        }
    }
    std::vector<std::pair<int, int>> qedges;
    for (auto [u, v] : g.edges()) {
        int bu = map.blob_of[static_cast<std::size_t>(u)];
        int bv = map.blob_of[static_cast<std::size_t>(v)];
        if (bu != bv) qedges.emplace_back(std::min(bu, bv), std::max(bu, bv));
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    return {Graph::from_edges(static_cast<int>(map.members.size()), qedges), std::move(map)};
}

/// Lifts a quotient cycle back to the original graph: cross edges are kept
/// and blob traversals are filled with shortest entry->exit paths inside the
/// blob, so the lifted cycle has at least as many vertices.
inline Witness lift_cycle(const Graph& g, const ContractionMap& map, const std::vector<int>& cycle) {
    const std::size_t len = cycle.size();
    if (len < 3) throw PreconditionError("quotient cycle must have at least 3 blobs");
    // Pick, per quotient edge, the lexicographically smallest cross edge.
    std::vector<int> exit_of(len, -1), entry_of(len, -1);
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t j = (i + 1) % len;
        const auto& a = map.members[static_cast<std::size_t>(cycle[i])];
        const auto& b = map.members[static_cast<std::size_t>(cycle[j])];
        std::vector<char> in_b(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v : b) in_b[static_cast<std::size_t>(v)] = 1;
        int best_u = -1, best_v = -1;
        for (int u : a) {
            for (int v : g.neighbors(u)) {
                if (!in_b[static_cast<std::size_t>(v)]) continue;
                if (best_u == -1 || std::make_pair(u, v) < std::make_pair(best_u, best_v)) {
                    best_u = u;
                    best_v = v;
                }
            }
        }
        if (best_u == -1) throw PreconditionError("cycle edge is not an edge of the quotient");
        exit_of[i] = best_u;
        entry_of[j] = best_v;
    }
    Witness w;
    w.kind = Witness::Kind::cycle;
    for (std::size_t i = 0; i < len; ++i) {
        const auto& mem = map.members[static_cast<std::size_t>(cycle[i])];
        std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v : mem) allowed[static_cast<std::size_t>(v)] = 1;
        auto inner = detail::bfs_path_within(g, entry_of[i], exit_of[i], allowed);
        if (inner.empty()) throw InternalError("blob is not internally connected");
        w.vertices.insert(w.vertices.end(), inner.begin(), inner.end());
    }
    if (!verify_witness(g, w)) throw InternalError("lifted cycle failed verification");
    return w;
}

/// Induced subgraph on `verts` (sorted ids in the result follow the order of
/// `verts` after sorting). Returns the subgraph and the original ids.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && local[static_cast<std::size_t>(v)] != -1)
                edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    return {Graph::from_edges(static_cast<int>(verts.size()), edges), std::move(verts)};
}

}  // namespace degpath
