#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "degpath/decompose.hpp"
#include "degpath/graph.hpp"
#include "degpath/rng.hpp"
#include "degpath/segments.hpp"
#include "degpath/subset_dp.hpp"

namespace degpath {

inline constexpr int kBruteThreshold = 18;

/// Exact longest path by subset DP; oracle for the randomized engines.
inline Witness brute_longest_path(const Graph& g, int threshold = kBruteThreshold) {
    if (g.vertex_count() > threshold)
        throw PreconditionError("graph too large for the exact oracle");
    return detail::exact_longest_path(g);
}

/// Exact longest cycle; nullopt iff the graph is a forest.
inline std::optional<Witness> brute_longest_cycle(const Graph& g, int threshold = kBruteThreshold) {
    if (g.vertex_count() > threshold)
        throw PreconditionError("graph too large for the exact oracle");
    return detail::exact_longest_cycle(g);
}

/// Exhaustive segment-system oracle.
inline std::optional<SegmentSystem> brute_segments(const Graph& g, const std::vector<int>& terminals,
                                                   int p, int r, bool extended) {
    detail::check_segment_args(g, terminals, p, r);
    const int nout = g.vertex_count() - static_cast<int>(terminals.size());
    if (nout > 10) throw PreconditionError("too many outside vertices for the exhaustive oracle");
    if (r > p) return std::nullopt;
    return detail::enumerate_system(g, terminals, p, r, extended);
}

namespace detail {

// Plain recursive enumeration of simple paths; independent of the subset DP.
inline void dfs_extend(const Graph& g, std::vector<int>& path, std::vector<char>& on,
                       std::vector<int>& best_path, int cycle_anchor, int& best_cycle_len,
                       std::vector<int>& best_cycle) {
    if (cycle_anchor < 0 && path.size() > best_path.size()) best_path = path;
    if (cycle_anchor >= 0 && path.size() >= 3 && g.has_edge(path.back(), cycle_anchor) &&
        static_cast<int>(path.size()) > best_cycle_len) {
        best_cycle_len = static_cast<int>(path.size());
        best_cycle = path;
    }
    for (int u : g.neighbors(path.back())) {
        if (on[static_cast<std::size_t>(u)]) continue;
        if (cycle_anchor >= 0 && u < cycle_anchor) continue;  // canonical anchor = min vertex
        path.push_back(u);
        on[static_cast<std::size_t>(u)] = 1;
        dfs_extend(g, path, on, best_path, cycle_anchor, best_cycle_len, best_cycle);
        on[static_cast<std::size_t>(u)] = 0;
        path.pop_back();
    }
}

}  // namespace detail

/// Longest path by exhaustive DFS (cross-check for the subset DP oracle).
inline Witness dfs_longest_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw PreconditionError("empty graph has no path");
    std::vector<int> best;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<int> none;
    int dummy = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        on[static_cast<std::size_t>(s)] = 1;
        detail::dfs_extend(g, path, on, best, -1, dummy, none);
        on[static_cast<std::size_t>(s)] = 0;
    }
    Witness w;
    w.kind = Witness::Kind::path;
    w.vertices = std::move(best);
    return w;
}

/// Longest cycle by exhaustive DFS anchored at each cycle's minimum vertex.
inline std::optional<Witness> dfs_longest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> best;
    int best_len = 0;
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<int> none;
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        on[static_cast<std::size_t>(s)] = 1;
        detail::dfs_extend(g, path, on, none, s, best_len, best);
        on[static_cast<std::size_t>(s)] = 0;
    }
    if (best_len == 0) return std::nullopt;
    Witness w;
    w.kind = Witness::Kind::cycle;
    w.vertices = std::move(best);
    return w;
}

namespace detail {

inline bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == static_cast<long>(n) * (n - 1) / 2;
}

}  // namespace detail

/// Disjoint union of a non-complete G with K_{n-1}; degeneracy becomes n-2.
inline Graph gen_hardness_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("base graph needs at least 3 vertices");
    if (detail::is_complete(g)) throw PreconditionError("base graph must not be complete");
    auto edges = g.edges();
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) edges.emplace_back(n + i, n + j);
    Graph out = Graph::from_edges(2 * n - 1, edges);
    if (degeneracy(out) != n - 2) throw InternalError("gadget degeneracy identity failed");
    return out;
}

/// Union of a connected non-complete G with K_{n-1} sharing vertex 0.
inline Graph gen_hardness_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("base graph needs at least 3 vertices");
    if (!is_connected(g)) throw PreconditionError("base graph must be connected");
    if (detail::is_complete(g)) throw PreconditionError("base graph must not be complete");
    auto edges = g.edges();
    // Clique on {0, n, ..., 2n-4}.
    std::vector<int> clique{0};
    for (int i = 0; i < n - 2; ++i) clique.push_back(n + i);
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            edges.emplace_back(clique[i], clique[j]);
    Graph out = Graph::from_edges(2 * n - 2, edges);
    if (degeneracy(out) != n - 2) throw InternalError("gadget degeneracy identity failed");
    return out;
}

namespace detail {

// Rational form of epsilon (num/den in lowest terms over a 10^6 grid) so the
// ceilings in the gadget sizes are computed exactly.
struct EpsRational {
    long long num, den;
};

inline EpsRational eps_rational(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("epsilon must lie strictly between 0 and 1");
    long long num = std::llround(eps * 1e6);
    long long den = 1000000;
    if (num <= 0 || num >= den) throw PreconditionError("epsilon must lie strictly between 0 and 1");
    long long g = std::gcd(num, den);
    return {num / g, den / g};
}

inline long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

struct TightSizes {
    int p, q;
    long long total;  // n + p + q == ceil((1+eps) * (p-1))
};

inline TightSizes tight_sizes(int n, double eps) {
    auto [num, den] = eps_rational(eps);
    long long p = 2 * ceil_div(static_cast<long long>(n) * den, num);
    long long q = ceil_div((den + num) * (p - 1), den) - (n + p);
    if (q < 1) throw InternalError("gadget tail size must be positive");
    return {static_cast<int>(p), static_cast<int>(q), n + p + q};
}

inline void check_tight_identities(const Graph& out, int p, double eps) {
    auto [num, den] = eps_rational(eps);
    if (degeneracy(out) != p - 1) throw InternalError("gadget degeneracy identity failed");
    long long expect = ceil_div((den + num) * (p - 1), den);
    if (static_cast<long long>(out.vertex_count()) != expect)
        throw InternalError("gadget vertex-count identity failed");
}

}  // namespace detail

/// Tightness gadget for paths: clique u_1..u_p joined to every base vertex via
/// u_1, plus a tail w_1..w_q from u_1 to u_2.
inline Graph gen_tight_path(const Graph& g, double eps) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("base graph needs at least 2 vertices");
    auto [p, q, total] = detail::tight_sizes(n, eps);
    auto edges = g.edges();
    auto u = [&](int i) { return n + i - 1; };         // i in 1..p
    auto w = [&](int i) { return n + p + i - 1; };     // i in 1..q
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) edges.emplace_back(u(i), u(j));
    for (int v = 0; v < n; ++v) edges.emplace_back(v, u(1));
    edges.emplace_back(u(1), w(1));
    for (int i = 2; i <= q; ++i) edges.emplace_back(w(i - 1), w(i));
    edges.emplace_back(w(q), u(2));
    Graph out = Graph::from_edges(static_cast<int>(total), edges);
    detail::check_tight_identities(out, p, eps);
    return out;
}

/// Tightness gadget for cycles: every base vertex joins u_1 and u_2; the tail
/// runs from u_2 to u_3. The result is 2-connected.
inline Graph gen_tight_cycle(const Graph& g, double eps) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("base graph needs at least 2 vertices");
    auto [p, q, total] = detail::tight_sizes(n, eps);
    auto edges = g.edges();
    auto u = [&](int i) { return n + i - 1; };
    auto w = [&](int i) { return n + p + i - 1; };
    for (int i = 1; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) edges.emplace_back(u(i), u(j));
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, u(1));
        edges.emplace_back(v, u(2));
    }
    edges.emplace_back(u(2), w(1));
    for (int i = 2; i <= q; ++i) edges.emplace_back(w(i - 1), w(i));
    edges.emplace_back(w(q), u(3));
    Graph out = Graph::from_edges(static_cast<int>(total), edges);
    detail::check_tight_identities(out, p, eps);
    return out;
}

/// Connected random graph with degeneracy exactly d: a (d+1)-clique plus
/// vertices attached to d random predecessors each.
inline Graph gen_random_with_degeneracy(int n, int d, std::uint64_t seed) {
    if (d < 1 || d > n - 2)
        throw PreconditionError("degeneracy parameter must satisfy 1 <= d <= n-2");
    SplitMix rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) edges.emplace_back(i, j);
    for (int v = d + 1; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < d)
            targets.insert(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))));
        for (int t : targets) edges.emplace_back(t, v);
    }
    Graph out = Graph::from_edges(n, edges);
    if (degeneracy(out) != d) throw InternalError("random instance missed the degeneracy target");
    return out;
}

/// Declarative generator request, as used by the CLI.
struct GenSpec {
    std::string kind;  // hardness-path | hardness-cycle | tight-path | tight-cycle | random-degen
    int n = 0;
    int d = 0;
    double eps = 0.0;
    std::uint64_t seed = 0;
    std::optional<Graph> base;  // required by the gadget generators
};

inline Graph generate(const GenSpec& spec) {
    if (spec.kind == "random-degen") return gen_random_with_degeneracy(spec.n, spec.d, spec.seed);
    if (!spec.base) throw PreconditionError("generator '" + spec.kind + "' needs a base graph");
    if (spec.kind == "hardness-path") return gen_hardness_path(*spec.base);
    if (spec.kind == "hardness-cycle") return gen_hardness_cycle(*spec.base);
    if (spec.kind == "tight-path") return gen_tight_path(*spec.base, spec.eps);
    if (spec.kind == "tight-cycle") return gen_tight_cycle(*spec.base, spec.eps);
    throw PreconditionError("unknown generator kind '" + spec.kind + "'");
}

}  // namespace degpath
