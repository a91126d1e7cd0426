#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "degpath/colorpath.hpp"
#include "degpath/graph.hpp"

namespace degpath {

/// Ordered, oriented collection of terminal-set segments.
///
/// Each paths[i] runs s_i .. t_i. Plain systems: every segment has both ends
/// in `terminals` and at least one internal vertex outside it. Extended
/// systems additionally allow one or two one-terminal segments (exactly one
/// end in `terminals`); the first such segment comes first (free end leading)
/// and the second, if any, comes last (free end trailing).
struct SegmentSystem {
    std::vector<std::vector<int>> paths;
    std::vector<int> terminals;  // sorted
    bool extended = false;

    int source(std::size_t i) const { return paths[i].front(); }
    int target(std::size_t i) const { return paths[i].back(); }

    /// Total count of vertices lying outside the terminal set.
    int outside_count() const {
        std::set<int> outside;
        for (const auto& p : paths)
            for (int v : p)
                if (!std::binary_search(terminals.begin(), terminals.end(), v)) outside.insert(v);
        return static_cast<int>(outside.size());
    }
};

/// Checks every structural invariant of `sys` against G and T. Ordering and
/// orientation of the paths are not constrained here.
inline bool validate_system(const Graph& g, const std::vector<int>& terminals,
                            const SegmentSystem& sys) {
    const int n = g.vertex_count();
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    for (int v : terminals) {
        if (v < 0 || v >= n) return false;
        in_t[static_cast<std::size_t>(v)] = 1;
    }
    if (sys.paths.empty()) return false;

    int one_terminal = 0;
    std::vector<char> outside_used(static_cast<std::size_t>(n), 0);
    std::vector<int> end_count(static_cast<std::size_t>(n), 0);
    std::set<std::pair<int, int>> union_edges;
    for (const auto& p : sys.paths) {
        if (p.size() < 2) return false;
        std::set<int> distinct(p.begin(), p.end());
        if (distinct.size() != p.size()) return false;
        for (int v : p)
            if (v < 0 || v >= n) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
            auto e = std::minmax(p[i], p[i + 1]);
            if (!union_edges.emplace(e.first, e.second).second) return false;  // shared edge
        }
        // Internal vertices (and the free end of a one-terminal segment) must
        // avoid T.
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (in_t[static_cast<std::size_t>(p[i])]) return false;
        bool fs = in_t[static_cast<std::size_t>(p.front())];
        bool bs = in_t[static_cast<std::size_t>(p.back())];
        if (fs && bs) {
            if (p.size() < 3) return false;  // needs an internal vertex
        } else if (fs || bs) {
            ++one_terminal;
        } else {
            return false;  // no terminal end at all
        }
        // Non-terminal vertices are globally private to their segment.
        for (int v : p) {
            if (in_t[static_cast<std::size_t>(v)]) continue;
            if (outside_used[static_cast<std::size_t>(v)]) return false;
            outside_used[static_cast<std::size_t>(v)] = 1;
        }
        ++end_count[static_cast<std::size_t>(p.front())];
        ++end_count[static_cast<std::size_t>(p.back())];
    }
    if (sys.extended) {
        if (one_terminal < 1 || one_terminal > 2) return false;
    } else {
        if (one_terminal != 0) return false;
    }
    // Linear forest: max degree 2 and no cycle in the union.
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<int> dsu(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dsu[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (dsu[static_cast<std::size_t>(v)] != v) {
            dsu[static_cast<std::size_t>(v)] = dsu[static_cast<std::size_t>(dsu[static_cast<std::size_t>(v)])];
            v = dsu[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (auto [u, v] : union_edges) {
        if (++deg[static_cast<std::size_t>(u)] > 2 || ++deg[static_cast<std::size_t>(v)] > 2)
            return false;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;  // cycle
        dsu[static_cast<std::size_t>(ru)] = rv;
    }
    if (sys.extended && one_terminal == 2) {
        // The two one-terminal segments must occupy distinct forest components.
        std::vector<int> reps;
        for (const auto& p : sys.paths) {
            bool fs = in_t[static_cast<std::size_t>(p.front())];
            bool bs = in_t[static_cast<std::size_t>(p.back())];
            if (fs != bs) reps.push_back(find(p.front()));
        }
        if (reps.size() == 2 && reps[0] == reps[1]) return false;
    }
    return true;
}

/// Per-coloring alpha/beta (and optional gamma) tables of the segment DP.
/// Colors are 1..q in the public accessors; masks map color c to bit c-1.
struct DPTables {
    int q = 0;
    std::vector<int> cc;  // vertex -> 0-based color
    std::vector<char> in_t;
    std::vector<int> terminals;  // sorted
    std::vector<int> outside;    // sorted list of non-terminal vertices
    std::vector<int> ovidx;      // vertex -> index in `outside`, -1 for terminals
    // beta_bits[Y * q + i]: outside vertices v with a (s,v)-path where s is a
    // terminal colored i, the rest avoids T and uses exactly the colors Y.
    std::vector<detail::VertexBits> beta_bits;
    // alpha_bits[X * q + i]: bitmask over end colors j of feasible
    // two-terminal segments with start color i and color set X.
    std::vector<std::uint32_t> alpha_bits;
    // Optional gamma tables filled by compute_gammas: g[i][X * (p+1) + l] is
    // a bitmask over end colors j.
    int p = 0, r = 0;
    std::vector<std::vector<std::uint32_t>> g0, g1;

    static std::uint32_t color_set(std::initializer_list<int> colors) {
        std::uint32_t m = 0;
        for (int c : colors) m |= 1u << (c - 1);
        return m;
    }

    bool alpha(std::uint32_t x_set, int i, int j) const {
        if (i < 1 || i > q || j < 1 || j > q) return false;
        return (alpha_bits[static_cast<std::size_t>(x_set) * static_cast<std::size_t>(q) + (i - 1)] >>
                (j - 1)) &
               1u;
    }
    bool beta(std::uint32_t y_set, int i, int v) const {
        if (i < 1 || i > q) return false;
        if (ovidx[static_cast<std::size_t>(v)] < 0) return false;
        if ((y_set >> (i - 1)) & 1u) return false;
        return beta_bits[static_cast<std::size_t>(y_set) * static_cast<std::size_t>(q) + (i - 1)].test(
            ovidx[static_cast<std::size_t>(v)]);
    }
    bool gamma0(int i, std::uint32_t x_set, int l, int j) const {
        if (i < 1 || i >= static_cast<int>(g0.size()) + 1 || l < 0 || l > p) return false;
        if (static_cast<std::size_t>(i) >= g0.size()) return false;
        return (g0[static_cast<std::size_t>(i)][static_cast<std::size_t>(x_set) *
                                                    static_cast<std::size_t>(p + 1) +
                                                static_cast<std::size_t>(l)] >>
                (j - 1)) &
               1u;
    }
    bool gamma1(int i, std::uint32_t x_set, int l, int j) const {
        if (i < 1 || l < 0 || l > p) return false;
        if (static_cast<std::size_t>(i) >= g1.size()) return false;
        return (g1[static_cast<std::size_t>(i)][static_cast<std::size_t>(x_set) *
                                                    static_cast<std::size_t>(p + 1) +
                                                static_cast<std::size_t>(l)] >>
                (j - 1)) &
               1u;
    }
};

namespace detail {

inline bool bits_intersect(const VertexBits& a, const VertexBits& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] & b.w[i]) return true;
    return false;
}

inline int first_common(const VertexBits& a, const VertexBits& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        std::uint64_t x = a.w[i] & b.w[i];
        if (x) return static_cast<int>(i) * 64 + std::countr_zero(x);
    }
    return -1;
}

inline constexpr int kMaxSegmentColors = 16;

}  // namespace detail

/// Builds the beta and alpha tables for one coloring.
inline DPTables assemble_dp_tables(const Graph& g, const std::vector<int>& terminals,
                                   const Coloring& coloring) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.color.size()) != n)
        throw PreconditionError("coloring does not match the graph");
    if (coloring.q > detail::kMaxSegmentColors)
        throw PreconditionError("color count exceeds the segment DP limit (16)");
    DPTables tb;
    tb.q = coloring.q;
    tb.cc.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) tb.cc[static_cast<std::size_t>(v)] = coloring.color[static_cast<std::size_t>(v)] - 1;
    tb.terminals = terminals;
    std::sort(tb.terminals.begin(), tb.terminals.end());
    tb.in_t.assign(static_cast<std::size_t>(n), 0);
    for (int v : tb.terminals) {
        if (v < 0 || v >= n) throw PreconditionError("terminal out of range");
        tb.in_t[static_cast<std::size_t>(v)] = 1;
    }
    tb.ovidx.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (!tb.in_t[static_cast<std::size_t>(v)]) {
            tb.ovidx[static_cast<std::size_t>(v)] = static_cast<int>(tb.outside.size());
            tb.outside.push_back(v);
        }
    }
    const int q = tb.q;
    const int nout = static_cast<int>(tb.outside.size());
    const std::size_t nsets = std::size_t{1} << q;

    // Per outside vertex: colors of its terminal neighbours, and its outside
    // neighbourhood as a bitset.
    std::vector<std::uint32_t> t_nbr_colors(static_cast<std::size_t>(nout), 0);
    std::vector<detail::VertexBits> out_nbrs(static_cast<std::size_t>(nout),
                                             detail::VertexBits(nout));
    for (int idx = 0; idx < nout; ++idx) {
        int v = tb.outside[static_cast<std::size_t>(idx)];
        for (int u : g.neighbors(v)) {
            if (tb.in_t[static_cast<std::size_t>(u)])
                t_nbr_colors[static_cast<std::size_t>(idx)] |= 1u << tb.cc[static_cast<std::size_t>(u)];
            else
                out_nbrs[static_cast<std::size_t>(idx)].set(tb.ovidx[static_cast<std::size_t>(u)]);
        }
    }

    tb.beta_bits.assign(nsets * static_cast<std::size_t>(q), detail::VertexBits(nout));
    for (std::uint32_t y = 1; y < nsets; ++y) {
        const bool single = std::popcount(y) == 1;
        for (int i = 0; i < q; ++i) {
            if ((y >> i) & 1u) continue;
            detail::VertexBits& row = tb.beta_bits[static_cast<std::size_t>(y) * q + i];
            for (int idx = 0; idx < nout; ++idx) {
                int c = tb.cc[static_cast<std::size_t>(tb.outside[static_cast<std::size_t>(idx)])];
                if (!((y >> c) & 1u)) continue;
                if (single) {
                    if ((t_nbr_colors[static_cast<std::size_t>(idx)] >> i) & 1u) row.set(idx);
                } else {
                    const detail::VertexBits& prev =
                        tb.beta_bits[static_cast<std::size_t>(y & ~(1u << c)) * q + i];
                    if (detail::bits_intersect(out_nbrs[static_cast<std::size_t>(idx)], prev))
                        row.set(idx);
                }
            }
        }
    }

    // alpha(Y ∪ {i, j}, i, j): attach a terminal endpoint colored j to a beta
    // path; the resulting color set always has >= 3 colors.
    std::vector<detail::VertexBits> t_out_nbrs;
    t_out_nbrs.reserve(tb.terminals.size());
    for (int t : tb.terminals) {
        detail::VertexBits b(nout);
        for (int u : g.neighbors(t))
            if (!tb.in_t[static_cast<std::size_t>(u)]) b.set(tb.ovidx[static_cast<std::size_t>(u)]);
        t_out_nbrs.push_back(std::move(b));
    }
    tb.alpha_bits.assign(nsets * static_cast<std::size_t>(q), 0);
    for (std::uint32_t y = 1; y < nsets; ++y) {
        for (int i = 0; i < q; ++i) {
            if ((y >> i) & 1u) continue;
            const detail::VertexBits& row = tb.beta_bits[static_cast<std::size_t>(y) * q + i];
            if (!row.any()) continue;
            for (std::size_t ti = 0; ti < tb.terminals.size(); ++ti) {
                int j = tb.cc[static_cast<std::size_t>(tb.terminals[ti])];
                if (j == i || ((y >> j) & 1u)) continue;
                if (detail::bits_intersect(row, t_out_nbrs[ti])) {
                    std::uint32_t x = y | (1u << i) | (1u << j);
                    tb.alpha_bits[static_cast<std::size_t>(x) * q + i] |= 1u << j;
                }
            }
        }
    }
    return tb;
}

namespace detail {

/// Beta path [s, ..., v] in original vertex ids; colors of everything after s
/// are exactly y_set, s is a terminal with 0-based color i.
inline std::vector<int> reconstruct_beta(const Graph& g, const DPTables& tb, std::uint32_t y_set,
                                         int i, int ov) {
    std::vector<int> rev;
    std::uint32_t y = y_set;
    int cur = ov;
    while (true) {
        int v = tb.outside[static_cast<std::size_t>(cur)];
        rev.push_back(v);
        int c = tb.cc[static_cast<std::size_t>(v)];
        y &= ~(1u << c);
        if (y == 0) {
            for (int u : g.neighbors(v)) {
                if (tb.in_t[static_cast<std::size_t>(u)] && tb.cc[static_cast<std::size_t>(u)] == i) {
                    rev.push_back(u);
                    std::reverse(rev.begin(), rev.end());
                    return rev;
                }
            }
            throw InternalError("beta backtracking found no terminal start");
        }
        const VertexBits& prev = tb.beta_bits[static_cast<std::size_t>(y) * tb.q + i];
        int next = -1;
        for (int u : g.neighbors(v)) {
            int uo = tb.ovidx[static_cast<std::size_t>(u)];
            if (uo >= 0 && prev.test(uo)) {
                next = uo;
                break;
            }
        }
        if (next < 0) throw InternalError("beta backtracking lost its predecessor");
        cur = next;
    }
}

/// Two-terminal segment [s, ..., t] with c(s)=i, c(t)=j (0-based), colors X.
inline std::vector<int> reconstruct_alpha(const Graph& g, const DPTables& tb, std::uint32_t x_set,
                                          int i, int j) {
    std::uint32_t y = x_set & ~(1u << i) & ~(1u << j);
    const VertexBits& row = tb.beta_bits[static_cast<std::size_t>(y) * tb.q + i];
    for (std::size_t ti = 0; ti < tb.terminals.size(); ++ti) {
        int t = tb.terminals[ti];
        if (tb.cc[static_cast<std::size_t>(t)] != j) continue;
        for (int u : g.neighbors(t)) {
            int uo = tb.ovidx[static_cast<std::size_t>(u)];
            if (uo >= 0 && row.test(uo)) {
                auto path = reconstruct_beta(g, tb, y, i, uo);
                path.push_back(t);
                return path;
            }
        }
    }
    throw InternalError("alpha entry has no realizing segment");
}

struct AlphaEntry {
    std::uint32_t y;
    int h;  // start color, 0-based
    std::uint32_t jmask;
};

inline std::vector<AlphaEntry> useful_alpha(const DPTables& tb) {
    std::vector<AlphaEntry> list;
    const std::size_t nsets = std::size_t{1} << tb.q;
    for (std::uint32_t x = 1; x < nsets; ++x) {
        for (int h = 0; h < tb.q; ++h) {
            std::uint32_t m = tb.alpha_bits[static_cast<std::size_t>(x) * tb.q + h];
            if (m) list.push_back({x, h, m});
        }
    }
    return list;
}

/// gamma tables for segment counts 1..r; gamma[i][X*(p+1)+l] is the bitmask
/// over end colors j. one_terminal selects the extended base case.
inline std::vector<std::vector<std::uint32_t>> compute_gamma(const DPTables& tb, int p, int r,
                                                             bool one_terminal) {
    const int q = tb.q;
    const std::uint32_t full = (1u << q) - 1;
    const std::size_t cells = (std::size_t{1} << q) * static_cast<std::size_t>(p + 1);
    std::vector<std::vector<std::uint32_t>> gam(static_cast<std::size_t>(r) + 1);
    for (int i = 1; i <= r; ++i) gam[static_cast<std::size_t>(i)].assign(cells, 0);

    auto cell = [p](std::uint32_t x, int l) {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(p + 1) +
               static_cast<std::size_t>(l);
    };

    if (one_terminal) {
        for (std::uint32_t y = 1; y <= full; ++y) {
            int l = std::popcount(y);
            if (l < 1 || l > p) continue;
            for (int j = 0; j < q; ++j) {
                if ((y >> j) & 1u) continue;
                if (tb.beta_bits[static_cast<std::size_t>(y) * q + j].any())
                    gam[1][cell(y | (1u << j), l)] |= 1u << j;
            }
        }
    } else {
        for (std::uint32_t x = 1; x <= full; ++x) {
            int l = std::popcount(x) - 2;
            if (l < 1 || l > p) continue;
            for (int h = 0; h < q; ++h) {
                std::uint32_t m = tb.alpha_bits[static_cast<std::size_t>(x) * q + h];
                if (m) gam[1][cell(x, l)] |= m;
            }
        }
    }

    auto alphas = useful_alpha(tb);
    for (int i = 2; i <= r; ++i) {
        const auto& prev = gam[static_cast<std::size_t>(i - 1)];
        auto& cur = gam[static_cast<std::size_t>(i)];
        for (const auto& a : alphas) {
            const int seg_l = std::popcount(a.y) - 2;
            const std::uint32_t comp = full & ~a.y;
            std::uint32_t z = comp;
            while (true) {
                for (int lp = i - 1; lp <= p - seg_l; ++lp) {
                    bool ok = false;
                    // Reuse the previous end color h as the new start color.
                    if (prev[cell(z | (1u << a.h), lp)] & (1u << a.h)) ok = true;
                    // Or start fresh: any previous end color inside Z works.
                    if (!ok && (prev[cell(z, lp)] & z)) ok = true;
                    if (ok) cur[cell(z | a.y, lp + seg_l)] |= a.jmask;
                }
                if (z == 0) break;
                z = (z - 1) & comp;
            }
        }
    }
    return gam;
}

/// Backtracks one gamma solution into i oriented segments s_1..t_1, ...,
/// where a one-terminal first segment (extended base) leads with its free end.
inline std::vector<std::vector<int>> recon_gamma(const Graph& g, const DPTables& tb,
                                                 const std::vector<std::vector<std::uint32_t>>& gam,
                                                 int i, std::uint32_t x, int l, int j,
                                                 bool one_terminal) {
    const int q = tb.q;
    auto cell = [&](std::uint32_t xs, int ls) {
        return static_cast<std::size_t>(xs) * static_cast<std::size_t>(tb.p + 1) +
               static_cast<std::size_t>(ls);
    };
    if (i == 1) {
        if (one_terminal) {
            std::uint32_t y = x & ~(1u << j);
            const VertexBits& row = tb.beta_bits[static_cast<std::size_t>(y) * q + j];
            for (std::size_t blk = 0; blk < row.w.size(); ++blk) {
                std::uint64_t bits = row.w[blk];
                if (!bits) continue;
                int ov = static_cast<int>(blk) * 64 + std::countr_zero(bits);
                auto path = reconstruct_beta(g, tb, y, j, ov);
                std::reverse(path.begin(), path.end());  // free end leads
                return {path};
            }
            throw InternalError("gamma base has no realizing one-terminal segment");
        }
        for (int h = 0; h < q; ++h) {
            if ((tb.alpha_bits[static_cast<std::size_t>(x) * q + h] >> j) & 1u)
                return {reconstruct_alpha(g, tb, x, h, j)};
        }
        throw InternalError("gamma base has no realizing segment");
    }
    auto alphas = useful_alpha(tb);
    const auto& prev = gam[static_cast<std::size_t>(i - 1)];
    for (const auto& a : alphas) {
        if (!((a.jmask >> j) & 1u)) continue;
        if ((a.y & x) != a.y) continue;
        const int seg_l = std::popcount(a.y) - 2;
        const int lp = l - seg_l;
        if (lp < i - 1 || lp > tb.p) continue;
        const std::uint32_t z = x & ~a.y;
        if ((prev[cell(z | (1u << a.h), lp)] >> a.h) & 1u) {
            auto segs = recon_gamma(g, tb, gam, i - 1, z | (1u << a.h), lp, a.h, one_terminal);
            segs.push_back(reconstruct_alpha(g, tb, a.y, a.h, j));
            return segs;
        }
        std::uint32_t jm = prev[cell(z, lp)] & z;
        if (jm) {
            int hp = std::countr_zero(jm);
            auto segs = recon_gamma(g, tb, gam, i - 1, z, lp, hp, one_terminal);
            segs.push_back(reconstruct_alpha(g, tb, a.y, a.h, j));
            return segs;
        }
    }
    throw InternalError("gamma backtracking found no decomposition");
}

}  // namespace detail

struct SegmentsResult {
    std::optional<SegmentSystem> system;
    long long trials_used = 0;
};

inline long long default_segment_trials(int p) {
    double raw = std::ceil(std::exp(3.0 * static_cast<double>(p)));
    if (!(raw < 1e6)) return 1000000;
    return std::max(1LL, static_cast<long long>(raw));
}

namespace detail {

/// Orders and orients an unordered bag of segments into the canonical chain
/// layout; nullopt if the bag is not a valid (extended) system.
inline std::optional<SegmentSystem> normalize_system(const Graph& g,
                                                     const std::vector<int>& terminals,
                                                     std::vector<std::vector<int>> paths,
                                                     bool extended) {
    const int n = g.vertex_count();
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    std::vector<int> tsorted = terminals;
    std::sort(tsorted.begin(), tsorted.end());
    for (int v : tsorted) in_t[static_cast<std::size_t>(v)] = 1;

    const std::size_t r = paths.size();
    std::vector<int> kind(r, 0);  // 0 = two-terminal, 1 = one-terminal
    for (std::size_t i = 0; i < r; ++i) {
        auto& p = paths[i];
        if (p.size() < 2) return std::nullopt;
        bool fs = in_t[static_cast<std::size_t>(p.front())];
        bool bs = in_t[static_cast<std::size_t>(p.back())];
        if (fs && bs) {
            kind[i] = 0;
        } else if (fs || bs) {
            kind[i] = 1;
            if (fs) std::reverse(p.begin(), p.end());  // free end leads
        } else {
            return std::nullopt;
        }
    }

    // Chain segments that share a terminal endpoint.
    std::map<int, std::vector<std::size_t>> ends_at;
    for (std::size_t i = 0; i < r; ++i) {
        if (kind[i] == 0) {
            ends_at[paths[i].front()].push_back(i);
            ends_at[paths[i].back()].push_back(i);
        } else {
            ends_at[paths[i].back()].push_back(i);  // only the terminal end chains
        }
    }
    for (const auto& [v, segs] : ends_at)
        if (segs.size() > 2) return std::nullopt;

    std::vector<char> placed(r, 0);
    std::vector<std::vector<std::vector<int>>> chains;
    std::vector<int> chain_one_count;
    auto other_end = [&](std::size_t i, int v) {
        return paths[i].front() == v ? paths[i].back() : paths[i].front();
    };
    auto walk_chain = [&](std::size_t start, int from_vertex) {
        std::vector<std::vector<int>> chain;
        int ones = 0;
        std::size_t cur = start;
        int enter = from_vertex;
        while (true) {
            placed[cur] = 1;
            if (kind[cur] == 1) ++ones;
            std::vector<int> oriented = paths[cur];
            if (kind[cur] == 0 && oriented.front() != enter) std::reverse(oriented.begin(), oriented.end());
            if (kind[cur] == 0 && oriented.front() != enter) return std::pair{chain, -1};  // broken
            int exit = oriented.back();
            chain.push_back(std::move(oriented));
            std::size_t next = r;
            for (std::size_t cand : ends_at[exit])
                if (!placed[cand]) next = cand;
            if (next == r) break;
            // A one-terminal segment can only start a chain, never continue it.
            if (kind[next] == 1) return std::pair{chain, -1};
            cur = next;
            enter = exit;
        }
        return std::pair{chain, ones};
    };

    // Start chains at one-terminal segments first (their free end is forced
    // to lead), then at free terminal endpoints of two-terminal segments.
    for (std::size_t i = 0; i < r; ++i) {
        if (placed[i] || kind[i] != 1) continue;
        auto [chain, ones] = walk_chain(i, paths[i].front());
        if (ones < 0) return std::nullopt;
        chains.push_back(std::move(chain));
        chain_one_count.push_back(ones);
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (placed[i]) continue;
        int start_v = -1;
        if (ends_at[paths[i].front()].size() == 1)
            start_v = paths[i].front();
        else if (ends_at[paths[i].back()].size() == 1)
            start_v = paths[i].back();
        if (start_v < 0) continue;  // mid-chain; a later free-ended segment places it
        auto [chain, ones] = walk_chain(i, start_v);
        if (ones < 0) return std::nullopt;
        chains.push_back(std::move(chain));
        chain_one_count.push_back(ones);
    }
    for (std::size_t i = 0; i < r; ++i)
        if (!placed[i]) return std::nullopt;

    // Layout: first one-terminal chain leads; a second one (if any) goes last,
    // reversed so its free end trails.
    std::vector<int> one_chains, two_chains;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (chain_one_count[static_cast<std::size_t>(c)] == 1)
            one_chains.push_back(static_cast<int>(c));
        else if (chain_one_count[static_cast<std::size_t>(c)] == 0)
            two_chains.push_back(static_cast<int>(c));
        else
            return std::nullopt;  // two one-terminal segments in one component
    }
    SegmentSystem sys;
    sys.terminals = tsorted;
    sys.extended = extended;
    if (extended) {
        if (one_chains.empty() || one_chains.size() > 2) return std::nullopt;
    } else {
        if (!one_chains.empty()) return std::nullopt;
    }
    auto append_chain = [&](int c, bool reversed) {
        auto chain = chains[static_cast<std::size_t>(c)];
        if (reversed) {
            std::reverse(chain.begin(), chain.end());
            for (auto& p : chain) std::reverse(p.begin(), p.end());
        }
        for (auto& p : chain) sys.paths.push_back(std::move(p));
    };
    if (extended) append_chain(one_chains[0], false);
    for (int c : two_chains) append_chain(c, false);
    if (extended && one_chains.size() == 2) append_chain(one_chains[1], true);
    if (!validate_system(g, tsorted, sys)) return std::nullopt;
    return sys;
}

/// Exhaustive segment-system search for small instances: first valid system
/// with exactly p outside vertices and r segments, in lexicographic candidate
/// order.
inline std::optional<SegmentSystem> enumerate_system(const Graph& g,
                                                     const std::vector<int>& terminals, int p,
                                                     int r, bool extended) {
    const int n = g.vertex_count();
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    std::vector<int> tsorted = terminals;
    std::sort(tsorted.begin(), tsorted.end());
    for (int v : tsorted) in_t[static_cast<std::size_t>(v)] = 1;
    std::vector<int> outside;
    std::vector<int> ovidx(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (!in_t[static_cast<std::size_t>(v)]) {
            ovidx[static_cast<std::size_t>(v)] = static_cast<int>(outside.size());
            outside.push_back(v);
        }
    if (static_cast<int>(outside.size()) > 20)
        throw PreconditionError("exhaustive segment search limited to 20 outside vertices");

    struct Candidate {
        std::vector<int> path;
        std::uint32_t mask;  // outside vertices used
        int count;
        bool one_terminal;
    };
    std::vector<Candidate> cands;
    std::vector<int> cur;
    std::uint32_t cur_mask = 0;
    auto dfs = [&](auto&& self, int last, int depth) -> void {
        for (int u : g.neighbors(last)) {
            if (in_t[static_cast<std::size_t>(u)]) {
                if (depth >= 1 && u != cur.front()) {
                    auto path = cur;
                    path.push_back(u);
                    if (path.front() < path.back())  // dedup orientation
                        cands.push_back({path, cur_mask, depth, false});
                }
            } else if (depth < p) {
                int idx = ovidx[static_cast<std::size_t>(u)];
                if ((cur_mask >> idx) & 1u) continue;
                cur.push_back(u);
                cur_mask |= 1u << idx;
                if (extended) cands.push_back({cur, cur_mask, depth + 1, true});
                self(self, u, depth + 1);
                cur_mask &= ~(1u << idx);
                cur.pop_back();
            }
        }
    };
    for (int t : tsorted) {
        cur = {t};
        cur_mask = 0;
        dfs(dfs, t, 0);
    }

    std::vector<std::size_t> chosen;
    std::optional<SegmentSystem> found;
    auto pick = [&](auto&& self, std::size_t from, std::uint32_t used, int total,
                    int ones) -> bool {
        if (static_cast<int>(chosen.size()) == r) {
            if (total != p) return false;
            if (extended && (ones < 1 || ones > 2)) return false;
            std::vector<std::vector<int>> paths;
            for (std::size_t c : chosen) paths.push_back(cands[c].path);
            auto sys = normalize_system(g, tsorted, std::move(paths), extended);
            if (sys) {
                found = std::move(sys);
                return true;
            }
            return false;
        }
        int remaining = r - static_cast<int>(chosen.size());
        for (std::size_t c = from; c < cands.size(); ++c) {
            if (cands[c].mask & used) continue;
            int nt = total + cands[c].count;
            if (nt + (remaining - 1) > p) continue;  // each segment needs >= 1
            int no = ones + (cands[c].one_terminal ? 1 : 0);
            if (extended && no > 2) continue;
            chosen.push_back(c);
            if (self(self, c + 1, used | cands[c].mask, nt, no)) return true;
            chosen.pop_back();
        }
        return false;
    };
    pick(pick, 0, 0, 0, 0);
    return found;
}

inline void check_segment_args(const Graph& g, const std::vector<int>& terminals, int p, int r) {
    if (p < 1) throw PreconditionError("p must be at least 1");
    if (r < 1) throw PreconditionError("r must be at least 1");
    if (terminals.empty()) throw PreconditionError("terminal set must be nonempty");
    std::set<int> ts(terminals.begin(), terminals.end());
    if (ts.size() != terminals.size()) throw PreconditionError("terminal set has duplicates");
    for (int v : terminals)
        if (v < 0 || v >= g.vertex_count()) throw PreconditionError("terminal out of range");
    if (static_cast<int>(ts.size()) == g.vertex_count())
        throw PreconditionError("terminal set must not cover the whole graph");
}

}  // namespace detail

/// Plain system with r segments and exactly p outside-T vertices, or none.
inline SegmentsResult solve_segments(const Graph& g, const std::vector<int>& terminals, int p,
                                     int r, const TrialBudget& budget) {
    detail::check_segment_args(g, terminals, p, r);
    SegmentsResult res;
    if (r > p) return res;  // every segment needs an internal vertex
    const int n = g.vertex_count();
    const int nout = n - static_cast<int>(terminals.size());
    if (nout < p || terminals.size() < 2) return res;
    if (n <= budget.exact_threshold && nout <= 20) {
        res.system = detail::enumerate_system(g, terminals, p, r, false);
        return res;
    }
    const int q = p + 2 * r;
    if (q > detail::kMaxSegmentColors)
        throw PreconditionError("p + 2r exceeds the segment DP color limit (16)");
    const long long trials = budget.trials > 0 ? budget.trials : default_segment_trials(p);
    const std::uint32_t full = (1u << q) - 1;
    for (long long t = 0; t < trials; ++t) {
        ++res.trials_used;
        Coloring c = random_coloring(n, q, budget.seed, static_cast<std::uint64_t>(t));
        DPTables tb = assemble_dp_tables(g, terminals, c);
        tb.p = p;
        tb.r = r;
        auto gam = detail::compute_gamma(tb, p, r, false);
        const auto& last = gam[static_cast<std::size_t>(r)];
        for (std::uint32_t x = 1; x <= full; ++x) {
            std::uint32_t jm =
                last[static_cast<std::size_t>(x) * static_cast<std::size_t>(p + 1) +
                     static_cast<std::size_t>(p)];
            if (!jm) continue;
            int j = std::countr_zero(jm);
            SegmentSystem sys;
            sys.paths = detail::recon_gamma(g, tb, gam, r, x, p, j, false);
            sys.terminals = tb.terminals;
            sys.extended = false;
            if (!validate_system(g, sys.terminals, sys) || sys.outside_count() != p)
                throw InternalError("segment DP produced an invalid system");
            res.system = std::move(sys);
            return res;
        }
    }
    return res;
}

/// Extended system (one or two one-terminal segments), or none.
inline SegmentsResult solve_extended_segments(const Graph& g, const std::vector<int>& terminals,
                                              int p, int r, const TrialBudget& budget) {
    detail::check_segment_args(g, terminals, p, r);
    SegmentsResult res;
    if (r > p) return res;
    const int n = g.vertex_count();
    const int nout = n - static_cast<int>(terminals.size());
    if (nout < p) return res;
    if (n <= budget.exact_threshold && nout <= 20) {
        res.system = detail::enumerate_system(g, terminals, p, r, true);
        return res;
    }
    const long long trials = budget.trials > 0 ? budget.trials : default_segment_trials(p);
    for (int q = p + r; q <= p + 2 * r - 1; ++q) {
        if (q > detail::kMaxSegmentColors)
            throw PreconditionError("color count exceeds the segment DP limit (16)");
        const std::uint32_t full = (1u << q) - 1;
        for (long long t = 0; t < trials; ++t) {
            ++res.trials_used;
            Coloring c = random_coloring(n, q, budget.seed, static_cast<std::uint64_t>(t));
            DPTables tb = assemble_dp_tables(g, terminals, c);
            tb.p = p;
            tb.r = r;
            auto gam = detail::compute_gamma(tb, p, r, true);
            // One one-terminal segment: a full chain accepted at size r.
            const auto& last = gam[static_cast<std::size_t>(r)];
            for (std::uint32_t x = 1; x <= full; ++x) {
                std::uint32_t jm =
                    last[static_cast<std::size_t>(x) * static_cast<std::size_t>(p + 1) +
                         static_cast<std::size_t>(p)];
                if (!jm) continue;
                int j = std::countr_zero(jm);
                SegmentSystem sys;
                sys.paths = detail::recon_gamma(g, tb, gam, r, x, p, j, true);
                sys.terminals = tb.terminals;
                sys.extended = true;
                if (!validate_system(g, sys.terminals, sys) || sys.outside_count() != p)
                    throw InternalError("extended segment DP produced an invalid system");
                res.system = std::move(sys);
                return res;
            }
            // Two one-terminal segments: disjoint union of two partial
            // solutions over complementary color sets.
            for (int a = 1; a <= r - 1; ++a) {
                const auto& ga = gam[static_cast<std::size_t>(a)];
                const auto& gb = gam[static_cast<std::size_t>(r - a)];
                for (std::uint32_t x = 1; x < full; ++x) {
                    for (int l = 1; l <= p - 1; ++l) {
                        std::uint32_t ma =
                            ga[static_cast<std::size_t>(x) * static_cast<std::size_t>(p + 1) +
                               static_cast<std::size_t>(l)];
                        if (!ma) continue;
                        std::uint32_t xc = full & ~x;
                        std::uint32_t mb =
                            gb[static_cast<std::size_t>(xc) * static_cast<std::size_t>(p + 1) +
                               static_cast<std::size_t>(p - l)];
                        if (!mb) continue;
                        auto part_a = detail::recon_gamma(g, tb, gam, a, x, l,
                                                          std::countr_zero(ma), true);
                        auto part_b = detail::recon_gamma(g, tb, gam, r - a, xc, p - l,
                                                          std::countr_zero(mb), true);
                        // Flip the second part so its one-terminal segment
                        // comes last with the free end trailing.
                        std::reverse(part_b.begin(), part_b.end());
                        for (auto& path : part_b) std::reverse(path.begin(), path.end());
                        SegmentSystem sys;
                        sys.paths = std::move(part_a);
                        for (auto& path : part_b) sys.paths.push_back(std::move(path));
                        sys.terminals = tb.terminals;
                        sys.extended = true;
                        if (!validate_system(g, sys.terminals, sys) || sys.outside_count() != p)
                            throw InternalError("extended segment DP produced an invalid system");
                        res.system = std::move(sys);
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace degpath
