#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "degpath/colorpath.hpp"
#include "degpath/decompose.hpp"
#include "degpath/graph.hpp"
#include "degpath/reroute.hpp"
#include "degpath/segments.hpp"

namespace degpath {

struct SolverReport {
    enum class Branch { small_d, big_core, segments, st_path };

    bool yes = false;
    std::optional<Witness> witness;
    Branch branch = Branch::small_d;
    int d = 0;
    int k = 0;
    int p = 0;
    int t_size = 0;
    std::vector<long long> trials_per_call;
    // Upper estimate of the probability that a Monte-Carlo "no" is wrong;
    // zero when the answer is exact.
    double residual_error = 0.0;
    std::vector<int> core;  // vertex set of the d-core used (empty in branch small_d)

    long long trials_total() const {
        long long s = 0;
        for (long long t : trials_per_call) s += t;
        return s;
    }
};

inline const char* branch_name(SolverReport::Branch b) {
    switch (b) {
        case SolverReport::Branch::small_d: return "small_d";
        case SolverReport::Branch::big_core: return "big_core";
        case SolverReport::Branch::segments: return "segments";
        case SolverReport::Branch::st_path: return "st_path";
    }
    return "?";
}

namespace detail {

// Miss-probability upper estimate for t trials when one trial succeeds with
// probability at least e^{-e_exp}.
inline double miss_probability(double e_exp, long long trials) {
    double per = std::exp(-e_exp);
    if (per >= 1.0) return 0.0;
    return std::exp(static_cast<double>(trials) * std::log1p(-per));
}

// Extends the path at both ends until maximal. `on` must match `path`.
inline void extend_maximal(const Graph& g, std::vector<int>& path, std::vector<char>& on) {
    bool grown = true;
    while (grown) {
        grown = false;
        for (int u : g.neighbors(path.back())) {
            if (!on[static_cast<std::size_t>(u)]) {
                path.push_back(u);
                on[static_cast<std::size_t>(u)] = 1;
                grown = true;
                break;
            }
        }
        for (int u : g.neighbors(path.front())) {
            if (!on[static_cast<std::size_t>(u)]) {
                path.insert(path.begin(), u);
                on[static_cast<std::size_t>(u)] = 1;
                grown = true;
                break;
            }
        }
    }
}

// For a maximal path, a cycle on exactly the path's vertices: the closing
// edge if present, else a crossing pair (front ~ path[i+1], back ~ path[i]).
// Empty when no such cycle exists (then |path| >= 2*min_degree + 1).
inline std::vector<int> spanning_cycle_of_path(const Graph& g, const std::vector<int>& path) {
    const int l = static_cast<int>(path.size());
    if (l >= 3 && g.has_edge(path.front(), path.back())) return path;
    std::vector<char> front_adj(static_cast<std::size_t>(l), 0);
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < l; ++i) pos[static_cast<std::size_t>(path[static_cast<std::size_t>(i)])] = i;
    for (int u : g.neighbors(path.front())) {
        int i = pos[static_cast<std::size_t>(u)];
        if (i >= 0) front_adj[static_cast<std::size_t>(i)] = 1;
    }
    for (int u : g.neighbors(path.back())) {
        int i = pos[static_cast<std::size_t>(u)];
        if (i >= 1 && i + 1 < l && front_adj[static_cast<std::size_t>(i + 1)]) {
            // Cycle: path[0..i], then path[l-1] down to path[i+1], close to path[0].
            std::vector<int> cyc(path.begin(), path.begin() + i + 1);
            for (int j = l - 1; j > i; --j) cyc.push_back(path[static_cast<std::size_t>(j)]);
            return cyc;
        }
    }
    return {};
}

// Replaces the path by w followed by the cycle rotated to start at a vertex
// adjacent to w. Returns false when no outside vertex attaches to the cycle.
inline bool absorb_outside(const Graph& g, const std::vector<int>& cyc, std::vector<int>& path,
                           std::vector<char>& on) {
    const int l = static_cast<int>(cyc.size());
    for (int j = 0; j < l; ++j) {
        for (int w : g.neighbors(cyc[static_cast<std::size_t>(j)])) {
            if (on[static_cast<std::size_t>(w)]) continue;
            path.clear();
            path.push_back(w);
            on[static_cast<std::size_t>(w)] = 1;
            for (int i = 0; i < l; ++i) path.push_back(cyc[static_cast<std::size_t>((j + i) % l)]);
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Path with at least min{2*min_degree + 1, n} vertices, built by repeated
/// maximal extension, spanning-cycle rotation, and absorption of an outside
/// neighbour.
inline Witness erdos_gallai_path(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph must be connected");
    const int n = g.vertex_count();
    const int target = std::min(2 * g.min_degree() + 1, n);
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<int> path{0};
    on[0] = 1;
    while (true) {
        detail::extend_maximal(g, path, on);
        if (static_cast<int>(path.size()) >= target) break;
        auto cyc = detail::spanning_cycle_of_path(g, path);
        // Below 2*delta+1 vertices a maximal path always has a crossing.
        if (cyc.empty()) throw InternalError("short maximal path without a spanning cycle");
        if (!detail::absorb_outside(g, cyc, path, on))
            throw InternalError("non-spanning cycle with no outside attachment");
    }
    Witness w;
    w.kind = Witness::Kind::path;
    w.vertices = std::move(path);
    if (!verify_witness(g, w)) throw InternalError("path construction failed verification");
    return w;
}

/// Cycle with at least min{2*min_degree, n} vertices in a 2-connected graph.
/// Constructive improvement rules, with an exact small-n fallback.
inline Witness dirac_cycle(const Graph& g, int exact_threshold = 22) {
    if (!is_two_connected(g)) throw PreconditionError("graph must be 2-connected");
    const int n = g.vertex_count();
    const int delta = g.min_degree();
    const int target = std::min(2 * delta, n);

    auto finish = [&](std::vector<int> cyc) {
        Witness w;
        w.kind = Witness::Kind::cycle;
        w.vertices = std::move(cyc);
        if (!verify_witness(g, w) || w.size() < target)
            throw InternalError("cycle construction failed verification");
        return w;
    };

    // Grow a maximal path; while it has a spanning cycle, absorb an outside
    // vertex. This either produces a Hamiltonian cycle or stalls on a long
    // crossing-free maximal path.
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<int> path{0};
    on[0] = 1;
    std::vector<int> cycle;
    while (true) {
        detail::extend_maximal(g, path, on);
        auto cyc = detail::spanning_cycle_of_path(g, path);
        if (cyc.empty()) break;
        if (static_cast<int>(cyc.size()) == n) return finish(std::move(cyc));
        cycle = cyc;
        if (!detail::absorb_outside(g, cyc, path, on))
            throw InternalError("non-spanning cycle with no outside attachment");
    }
    if (cycle.empty()) {
        // Fall back to the longest closing chord from the front endpoint.
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < path.size(); ++i) pos[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
        int a = -1;
        for (int u : g.neighbors(path.front())) a = std::max(a, pos[static_cast<std::size_t>(u)]);
        if (a < 2) throw InternalError("endpoint with no usable chord");
        cycle.assign(path.begin(), path.begin() + a + 1);
    }

    // Improvement rules, each strictly enlarging the cycle.
    while (static_cast<int>(cycle.size()) < target) {
        const int len = static_cast<int>(cycle.size());
        std::vector<char> on_c(static_cast<std::size_t>(n), 0);
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < len; ++i) {
            on_c[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = 1;
            pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
        }
        bool improved = false;
        // Insert a vertex adjacent to two consecutive cycle vertices.
        for (int i = 0; i < len && !improved; ++i) {
            int u = cycle[static_cast<std::size_t>(i)];
            int v = cycle[static_cast<std::size_t>((i + 1) % len)];
            for (int w : g.neighbors(u)) {
                if (on_c[static_cast<std::size_t>(w)]) continue;
                if (g.has_edge(v, w)) {
                    cycle.insert(cycle.begin() + i + 1, w);
                    improved = true;
                    break;
                }
            }
        }
        if (improved) continue;
        // Replace a short cycle arc by a longer route through an outside
        // component.
        std::vector<int> outside;
        for (int v = 0; v < n; ++v)
            if (!on_c[static_cast<std::size_t>(v)]) outside.push_back(v);
        auto comps = detail::components_within(g, outside);
        for (const auto& comp : comps) {
            std::vector<char> allowed(static_cast<std::size_t>(n), 0);
            for (int v : comp) allowed[static_cast<std::size_t>(v)] = 1;
            std::set<int> attach;
            for (int v : comp)
                for (int u : g.neighbors(v))
                    if (on_c[static_cast<std::size_t>(u)]) attach.insert(u);
            std::vector<int> att(attach.begin(), attach.end());
            for (std::size_t ai = 0; ai < att.size() && !improved; ++ai) {
                for (std::size_t bi = ai + 1; bi < att.size() && !improved; ++bi) {
                    int x = att[ai], y = att[bi];
                    allowed[static_cast<std::size_t>(x)] = 1;
                    allowed[static_cast<std::size_t>(y)] = 1;
                    auto through = detail::bfs_path_within(g, x, y, allowed);
                    allowed[static_cast<std::size_t>(x)] = 0;
                    allowed[static_cast<std::size_t>(y)] = 0;
                    if (through.size() < 3) continue;
                    int il = static_cast<int>(through.size()) - 2;
                    int px = pos[static_cast<std::size_t>(x)], py = pos[static_cast<std::size_t>(y)];
                    if (px > py) {
                        std::swap(px, py);
                        std::reverse(through.begin(), through.end());
                    }
                    int inner1 = py - px - 1;            // arc px..py
                    int inner2 = len - (py - px) - 1;    // the other way round
                    if (il <= std::min(inner1, inner2)) continue;
                    std::vector<int> next;
                    if (inner1 <= inner2) {
                        // keep the long way py -> px, splice through the component
                        for (int i = py; i != px; i = (i + 1) % len)
                            next.push_back(cycle[static_cast<std::size_t>(i)]);
                        next.push_back(cycle[static_cast<std::size_t>(px)]);
                        // through runs x..y; interior goes x-side first
                        for (std::size_t i = 1; i + 1 < through.size(); ++i) next.push_back(through[i]);
                    } else {
                        for (int i = px; i != py; i = (i + 1) % len)
                            next.push_back(cycle[static_cast<std::size_t>(i)]);
                        next.push_back(cycle[static_cast<std::size_t>(py)]);
                        for (std::size_t i = through.size() - 2; i >= 1; --i) next.push_back(through[i]);
                    }
                    cycle = std::move(next);
                    improved = true;
                }
                if (improved) break;
            }
            if (improved) break;
        }
        if (improved) continue;
        if (n <= exact_threshold) {
            auto exact = detail::exact_longest_cycle(g);
            if (!exact) throw InternalError("2-connected graph without a cycle");
            return finish(std::move(exact->vertices));
        }
        throw InternalError("cycle improvement stalled below the degree bound");
    }
    return finish(std::move(cycle));
}

namespace detail {

inline std::vector<int> to_original(const std::vector<int>& local, const std::vector<int>& ids) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(ids[static_cast<std::size_t>(v)]);
    return out;
}

inline int local_id(const std::vector<int>& ids, int orig) {
    auto it = std::lower_bound(ids.begin(), ids.end(), orig);
    if (it == ids.end() || *it != orig) throw InternalError("vertex not in the core");
    return static_cast<int>(it - ids.begin());
}

/// Concatenates segments interleaved with covering paths into one walk.
/// cover[i] joins paths[i].back() to paths[i+1].front() (original ids); for a
/// path assembly the final cover leg may instead end at a fresh terminal.
inline std::vector<int> splice(const std::vector<std::vector<int>>& segs,
                               const std::vector<std::vector<int>>& cover) {
    std::vector<int> out = segs[0];
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (out.back() != cover[i].front()) throw InternalError("cover path does not chain");
        out.insert(out.end(), cover[i].begin() + 1, cover[i].end());
        if (i + 1 < segs.size()) {
            if (out.back() != segs[i + 1].front()) throw InternalError("segment does not chain");
            out.insert(out.end(), segs[i + 1].begin() + 1, segs[i + 1].end());
        }
    }
    return out;
}

/// Runs cover_paths on the core for the given original-id pairs and returns
/// the covering paths in original ids.
inline std::vector<std::vector<int>> cover_on_core(const Graph& h, const std::vector<int>& ids,
                                                   const std::vector<std::pair<int, int>>& pairs,
                                                   int k) {
    TerminalPairs tp;
    tp.k = k;
    for (auto [a, b] : pairs) tp.pairs.emplace_back(local_id(ids, a), local_id(ids, b));
    auto ws = cover_paths(h, tp);
    std::vector<std::vector<int>> out;
    out.reserve(ws.size());
    for (auto& w : ws) out.push_back(to_original(w.vertices, ids));
    return out;
}

/// Branch (b) contraction for a core that is not 2-connected: each component
/// of G minus the core is contracted into a chosen core neighbour, then the
/// quotient is 2-connected with min degree >= that of the core.
inline Witness contracted_dirac(const Graph& g, const Graph& h, const std::vector<int>& ids,
                                int d, int exact_threshold) {
    BlockTree bt = blocks_and_cuts(h);
    std::vector<char> in_core(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : ids) in_core[static_cast<std::size_t>(v)] = 1;
    std::vector<int> outside;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_core[static_cast<std::size_t>(v)]) outside.push_back(v);
    auto comps = components_within(g, outside);
    std::map<int, std::vector<int>> group_members;  // chosen core vertex -> blob
    for (const auto& comp : comps) {
        std::set<int> nbrs;
        for (int v : comp)
            for (int u : g.neighbors(v))
                if (in_core[static_cast<std::size_t>(u)]) nbrs.insert(u);
        if (nbrs.empty()) throw InternalError("outside component detached from the core");
        int chosen = -1;
        int best_dist = -1;
        for (int t : nbrs) {
            int lt = local_id(ids, t);
            if (!bt.is_cut_vertex(lt)) {
                chosen = t;  // lowest id wins: nbrs iterates ascending
                break;
            }
            int dist = block_tree_distance(bt, lt);
            if (dist > best_dist) {
                best_dist = dist;
                chosen = t;
            }
        }
        auto& blob = group_members[chosen];
        if (blob.empty()) blob.push_back(chosen);
        blob.insert(blob.end(), comp.begin(), comp.end());
    }
    std::vector<std::vector<int>> groups;
    for (auto& [v, mem] : group_members) groups.push_back(std::move(mem));
    auto [g2, cmap] = contract(g, groups);
    if (!is_two_connected(g2)) throw InternalError("contracted quotient is not 2-connected");
    if (g2.min_degree() < d) throw InternalError("contracted quotient lost the degree bound");
    Witness cyc = dirac_cycle(g2, exact_threshold);
    return lift_cycle(g, cmap, cyc.vertices);
}

}  // namespace detail

/// Decides whether connected G has a path with >= dg(G)+k vertices.
inline SolverReport lpad(const Graph& g, int k, const TrialBudget& budget) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (!is_connected(g)) throw PreconditionError("graph must be connected");
    SolverReport rep;
    rep.k = k;
    rep.d = degeneracy(g);
    const int d = rep.d;
    const int target = d + k;

    if (d <= 5 * k - 4) {
        rep.branch = SolverReport::Branch::small_d;
        auto r = longest_path_at_least(g, target, budget);
        rep.trials_per_call.push_back(r.trials_used);
        if (r.witness) {
            rep.yes = true;
            rep.witness = std::move(r.witness);
        } else if (r.trials_used > 0) {
            rep.residual_error = detail::miss_probability(static_cast<double>(target), r.trials_used);
        }
        return rep;
    }
    if (target > g.vertex_count()) return rep;  // exact no: not enough vertices

    auto core = d_core(g, d);
    if (!core) throw InternalError("degeneracy-deep core is missing");
    rep.core = *core;
    rep.t_size = static_cast<int>(core->size());
    auto [h, ids] = induced_subgraph(g, *core);

    if (rep.t_size >= target) {
        rep.branch = SolverReport::Branch::big_core;
        Witness w = erdos_gallai_path(h);
        w.vertices = detail::to_original(w.vertices, ids);
        if (!verify_witness(g, w) || w.size() < target)
            throw InternalError("core path misses the target length");
        rep.yes = true;
        rep.witness = std::move(w);
        return rep;
    }

    rep.branch = SolverReport::Branch::segments;
    rep.p = target - rep.t_size;
    const int p = rep.p;
    double worst_miss = 0.0;
    for (int r = 1; r <= p; ++r) {
        auto sr = solve_extended_segments(g, *core, p, r, budget);
        rep.trials_per_call.push_back(sr.trials_used);
        if (!sr.system) {
            if (sr.trials_used > 0)
                worst_miss = std::max(worst_miss,
                                      detail::miss_probability(3.0 * p, sr.trials_used));
            continue;
        }
        const auto& sys = *sr.system;
        const std::size_t rs = sys.paths.size();
        int ones = 0;
        for (const auto& pa : sys.paths) {
            bool fs = std::binary_search(ids.begin(), ids.end(), pa.front());
            bool bs = std::binary_search(ids.begin(), ids.end(), pa.back());
            if (fs != bs) ++ones;
        }
        std::vector<std::pair<int, int>> pairs;
        if (ones == 1) {
            std::set<int> used;
            for (const auto& pa : sys.paths)
                for (int v : pa) used.insert(v);
            int fresh = -1;
            for (int t : ids)
                if (!used.count(t)) {
                    fresh = t;
                    break;
                }
            if (fresh < 0) throw InternalError("no fresh terminal for the final cover leg");
            for (std::size_t i = 0; i < rs; ++i)
                pairs.emplace_back(sys.paths[i].back(),
                                   i + 1 < rs ? sys.paths[i + 1].front() : fresh);
        } else {
            for (std::size_t i = 0; i + 1 < rs; ++i)
                pairs.emplace_back(sys.paths[i].back(), sys.paths[i + 1].front());
        }
        auto cover = detail::cover_on_core(h, ids, pairs, k);
        Witness w;
        w.kind = Witness::Kind::path;
        w.vertices = detail::splice(sys.paths, cover);
        if (!verify_witness(g, w) || w.size() < target)
            throw InternalError("assembled path misses the target length");
        rep.yes = true;
        rep.witness = std::move(w);
        return rep;
    }
    rep.residual_error = worst_miss;
    return rep;
}

/// Decides whether 2-connected G has a cycle with >= dg(G)+k vertices.
inline SolverReport lcad(const Graph& g, int k, const TrialBudget& budget) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    if (!is_two_connected(g)) throw PreconditionError("graph must be 2-connected");
    SolverReport rep;
    rep.k = k;
    rep.d = degeneracy(g);
    const int d = rep.d;
    const int target = d + k;

    if (d <= 5 * k - 4) {
        rep.branch = SolverReport::Branch::small_d;
        auto r = longest_cycle_at_least(g, target, budget);
        rep.trials_per_call.push_back(r.trials_used);
        if (r.witness) {
            rep.yes = true;
            rep.witness = std::move(r.witness);
        } else if (r.trials_used > 0) {
            rep.residual_error = detail::miss_probability(static_cast<double>(target), r.trials_used);
        }
        return rep;
    }
    if (target > g.vertex_count()) return rep;  // exact no: not enough vertices

    auto core = d_core(g, d);
    if (!core) throw InternalError("degeneracy-deep core is missing");
    rep.core = *core;
    rep.t_size = static_cast<int>(core->size());
    auto [h, ids] = induced_subgraph(g, *core);

    if (rep.t_size >= target) {
        rep.branch = SolverReport::Branch::big_core;
        Witness w;
        if (is_two_connected(h)) {
            w = dirac_cycle(h, budget.exact_threshold > 0 ? std::max(budget.exact_threshold, 22) : 22);
            w.vertices = detail::to_original(w.vertices, ids);
            if (!verify_witness(g, w)) throw InternalError("core cycle failed verification");
        } else {
            w = detail::contracted_dirac(g, h, ids, d, 22);
        }
        if (w.size() < target) throw InternalError("core cycle misses the target length");
        rep.yes = true;
        rep.witness = std::move(w);
        return rep;
    }

    rep.p = target - rep.t_size;
    const int p = rep.p;
    double worst_miss = 0.0;

    // Case (i): a long (s,t)-path through the outside vertices.
    rep.branch = SolverReport::Branch::st_path;
    std::vector<char> in_core(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : ids) in_core[static_cast<std::size_t>(v)] = 1;
    std::vector<int> outside_and;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_core[static_cast<std::size_t>(v)]) outside_and.push_back(v);
    for (std::size_t si = 0; si < ids.size(); ++si) {
        for (std::size_t ti = si + 1; ti < ids.size(); ++ti) {
            int s = ids[si], t = ids[ti];
            std::vector<int> verts = outside_and;
            verts.push_back(s);
            verts.push_back(t);
            auto [gst_full, gst_ids] = induced_subgraph(g, verts);
            // Drop the single possible core edge (s,t).
            int ls = detail::local_id(gst_ids, s), lt = detail::local_id(gst_ids, t);
            Graph gst = gst_full;
            if (gst_full.has_edge(ls, lt)) {
                std::vector<std::pair<int, int>> es;
                for (auto [a, b] : gst_full.edges())
                    if (!(a == std::min(ls, lt) && b == std::max(ls, lt))) es.emplace_back(a, b);
                gst = Graph::from_edges(gst_full.vertex_count(), es);
            }
            auto r = st_path_at_least(gst, ls, lt, p + 2, budget);
            rep.trials_per_call.push_back(r.trials_used);
            if (!r.witness) {
                if (r.trials_used > 0)
                    worst_miss = std::max(worst_miss,
                                          detail::miss_probability(static_cast<double>(p + 2),
                                                                   r.trials_used));
                continue;
            }
            auto seg = detail::to_original(r.witness->vertices, gst_ids);
            auto cover = detail::cover_on_core(h, ids, {{t, s}}, k);
            auto cyc = detail::splice({seg}, cover);
            cyc.pop_back();  // closes back to s
            Witness w;
            w.kind = Witness::Kind::cycle;
            w.vertices = std::move(cyc);
            if (!verify_witness(g, w) || w.size() < target)
                throw InternalError("assembled cycle misses the target length");
            rep.yes = true;
            rep.witness = std::move(w);
            return rep;
        }
    }

    // Case (ii): a plain segment system with p..2p-2 outside
    // vertices, assembled cyclically.
    if (p >= 2) rep.branch = SolverReport::Branch::segments;
    for (int p2 = p; p2 <= 2 * p - 2; ++p2) {
        for (int r = 1; r <= std::min(p2, k); ++r) {
            auto sr = solve_segments(g, *core, p2, r, budget);
            rep.trials_per_call.push_back(sr.trials_used);
            if (!sr.system) {
                if (sr.trials_used > 0)
                    worst_miss = std::max(worst_miss,
                                          detail::miss_probability(3.0 * p2, sr.trials_used));
                continue;
            }
            const auto& sys = *sr.system;
            const std::size_t rs = sys.paths.size();
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < rs; ++i)
                pairs.emplace_back(sys.paths[i].back(), sys.paths[(i + 1) % rs].front());
            auto cover = detail::cover_on_core(h, ids, pairs, k);
            auto cyc = detail::splice(sys.paths, cover);
            cyc.pop_back();  // closes back to the first segment's start
            Witness w;
            w.kind = Witness::Kind::cycle;
            w.vertices = std::move(cyc);
            if (!verify_witness(g, w) || w.size() < target)
                throw InternalError("assembled cycle misses the target length");
            rep.yes = true;
            rep.witness = std::move(w);
            return rep;
        }
    }
    rep.residual_error = worst_miss;
    return rep;
}

}  // namespace degpath
