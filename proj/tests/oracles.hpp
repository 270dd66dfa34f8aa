#pragma once

// Brute-force oracles used to pin expected values. They recompute
// everything from the raw edge list and deliberately avoid the library's
// catalog/validation code paths.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hcd/cover.hpp"
#include "hcd/hedge_graph.hpp"

namespace oracle {

using hcd::HedgeGraph;
using hcd::HedgeId;

inline std::vector<std::vector<char>> residual_matrix(const HedgeGraph& h,
                                                      const std::vector<HedgeId>& deleted) {
    std::set<HedgeId> drop(deleted.begin(), deleted.end());
    std::vector<std::vector<char>> adj(h.vertex_count(),
                                       std::vector<char>(h.vertex_count(), 0));
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (drop.count(h.edge_hedge()[i])) continue;
        adj[es[i].first][es[i].second] = 1;
        adj[es[i].second][es[i].first] = 1;
    }
    return adj;
}

// Least induced P3 (a, b, c) of the residual underlying graph, path a-b-c
// with a < c, by full cubic scan.
inline std::optional<std::array<int, 3>> least_p3(const HedgeGraph& h,
                                                  const std::vector<HedgeId>& deleted) {
    auto adj = residual_matrix(h, deleted);
    const int n = h.vertex_count();
    std::optional<std::array<int, 3>> best;
    auto consider = [&](int a, int b, int c) {
        std::array<int, 3> t{a, b, c};
        if (!best || t < *best) best = t;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = a + 1; c < n; ++c) {
                if (b == a || b == c) continue;
                if (adj[a][b] && adj[b][c] && !adj[a][c]) consider(a, b, c);
            }
    return best;
}

inline bool valid(const HedgeGraph& h, const std::vector<HedgeId>& deleted) {
    return !least_p3(h, deleted).has_value();
}

// All valid hedge subsets; guarded to 20 live hedges.
inline std::vector<std::vector<HedgeId>> valid_subsets(const HedgeGraph& h) {
    const auto& hs = h.hedges();
    const int l = static_cast<int>(hs.size());
    if (l > 20) throw std::runtime_error("oracle: too many hedges");
    std::vector<std::vector<HedgeId>> out;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        std::vector<HedgeId> u;
        for (int i = 0; i < l; ++i)
            if ((mask >> i) & 1u) u.push_back(hs[i]);
        if (valid(h, u)) out.push_back(std::move(u));
    }
    return out;
}

inline int opt(const HedgeGraph& h) {
    int best = h.hedge_count();
    for (const auto& u : valid_subsets(h)) best = std::min(best, (int)u.size());
    return best;
}

inline int min_vc_size(const hcd::SimpleGraph& g) {
    if (g.n > 20) throw std::runtime_error("oracle: graph too large");
    int best = g.n;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
                covers = false;
                break;
            }
        if (covers) best = std::min(best, __builtin_popcount(mask));
    }
    return best;
}

inline int min_mvc_size(const hcd::ListCoverInstance& inst) {
    const int n = inst.g.n;
    if (n > 20) throw std::runtime_error("oracle: instance too large");
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : inst.g.edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
                ok = false;
                break;
            }
        for (int v = 0; ok && v < n; ++v)
            if ((mask >> v) & 1u)
                for (int x : inst.lists[v])
                    if (!((mask >> x) & 1u)) {
                        ok = false;
                        break;
                    }
        if (ok) {
            int w = __builtin_popcount(mask);
            if (best < 0 || w < best) best = w;
        }
    }
    return best;
}

// --- named instances ---------------------------------------------------

inline HedgeGraph inst_p3_ab() {
    return HedgeGraph::build(3, {{0, 1, "A"}, {1, 2, "B"}});
}

inline HedgeGraph inst_p3_aa() {
    return HedgeGraph::build(3, {{0, 1, "A"}, {1, 2, "A"}});
}

inline HedgeGraph inst_k3_aab() {
    return HedgeGraph::build(3, {{0, 1, "A"}, {0, 2, "A"}, {1, 2, "B"}});
}

inline HedgeGraph inst_k3_abc() {
    return HedgeGraph::build(3, {{0, 1, "A"}, {0, 2, "B"}, {1, 2, "C"}});
}

// Five-vertex graph with minimum vertex cover {1, 2, 3} (0-based).
inline hcd::SimpleGraph cover_example_graph() {
    return hcd::SimpleGraph::build(5, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

// Five two-hedge triangles whose doubled hedges chain into a domination
// tree, plus two simple P3 links.
inline HedgeGraph chained_triangles() {
    return HedgeGraph::build(21, {
        {0, 1, "x1"},   {0, 2, "x1"},   {1, 2, "x3"},   // x1 x1 x3
        {3, 4, "x3"},   {3, 5, "x3"},   {4, 5, "x4"},   // x3 x3 x4
        {6, 7, "x2"},   {6, 8, "x2"},   {7, 8, "x3"},   // x2 x2 x3
        {9, 10, "x3"},  {9, 11, "x3"},  {10, 11, "x5"}, // x3 x3 x5
        {12, 13, "y1"}, {12, 14, "y1"}, {13, 14, "y2"}, // y1 y1 y2
        {15, 16, "x2"}, {16, 17, "z1"},                 // P3 (x2, z1)
        {18, 19, "x5"}, {19, 20, "y2"},                 // P3 (x5, y2)
    });
}

inline std::vector<HedgeId> by_tokens(const HedgeGraph& h,
                                      const std::vector<std::string>& tokens) {
    std::vector<HedgeId> ids;
    for (const auto& t : tokens) ids.push_back(*h.hedge_by_token(t));
    std::sort(ids.begin(), ids.end());
    return ids;
}

inline std::vector<std::string> tokens_of(const HedgeGraph& h,
                                          const std::vector<HedgeId>& ids) {
    std::vector<std::string> out;
    for (HedgeId x : ids) out.push_back(h.hedge_token(x));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
