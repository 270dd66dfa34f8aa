#include "hcd/cover.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "hcd/errors.hpp"

namespace hcd {

SimpleGraph SimpleGraph::build(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw InputError("vertex out of range");
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw InputError("duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
    }
    std::sort(edges.begin(), edges.end());
    return SimpleGraph{n, std::move(edges)};
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool SimpleGraph::is_cover(const std::vector<int>& s) const {
    std::vector<char> in(n, 0);
    for (int v : s) in[v] = 1;
    for (auto [u, v] : edges)
        if (!in[u] && !in[v]) return false;
    return true;
}

std::vector<int> vc_2approx(const SimpleGraph& g) {
    std::vector<char> matched(g.n, 0);
    std::vector<int> cover;
    for (auto [u, v] : g.edges) {
        if (matched[u] || matched[v]) continue;
        matched[u] = matched[v] = 1;
        cover.push_back(u);
        cover.push_back(v);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

namespace {

// 2-coloring; returns colors or throws with an odd-cycle witness.
std::vector<int> bipartition(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> color(g.n, -1), parent(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    // odd cycle through v and w
                    std::vector<int> pv{v}, pw{w};
                    std::set<int> on_pv{v};
                    for (int x = v; parent[x] != -1; x = parent[x]) {
                        pv.push_back(parent[x]);
                        on_pv.insert(parent[x]);
                    }
                    while (!on_pv.count(pw.back())) pw.push_back(parent[pw.back()]);
                    std::string cyc;
                    for (int x : pv) {
                        cyc += std::to_string(x) + " ";
                        if (x == pw.back()) break;
                    }
                    for (int i = static_cast<int>(pw.size()) - 2; i >= 0; --i)
                        cyc += std::to_string(pw[i]) + " ";
                    throw StructuralError("graph is not bipartite, odd cycle: " + cyc);
                }
            }
        }
    }
    return color;
}

// Hopcroft-Karp maximum matching between the two color classes.
struct BipartiteMatching {
    std::vector<int> left;           // vertices with color 0, ascending
    std::vector<int> match;          // per vertex, matched partner or -1
    std::vector<std::vector<int>> adj;

    BipartiteMatching(const SimpleGraph& g, const std::vector<int>& color)
        : match(g.n, -1), adj(g.adjacency()) {
        for (int v = 0; v < g.n; ++v)
            if (color[v] == 0) left.push_back(v);
    }

    int run() {
        int size = 0;
        for (;;) {
            // BFS layering from free left vertices
            std::vector<int> dist(match.size(), -1);
            std::queue<int> q;
            for (int u : left)
                if (match[u] == -1) {
                    dist[u] = 0;
                    q.push(u);
                }
            bool reachable_free = false;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj[u]) {
                    if (match[w] == -1) {
                        reachable_free = true;
                    } else if (dist[match[w]] == -1) {
                        dist[match[w]] = dist[u] + 1;
                        q.push(match[w]);
                    }
                }
            }
            if (!reachable_free) break;
            for (int u : left)
                if (match[u] == -1 && augment(u, dist)) ++size;
        }
        return size;
    }

    bool augment(int u, std::vector<int>& dist) {
        for (int w : adj[u]) {
            int next = match[w];
            if (next == -1 || (dist[next] == dist[u] + 1 && augment(next, dist))) {
                match[u] = w;
                match[w] = u;
                return true;
            }
        }
        dist[u] = -1;
        return false;
    }
};

} // namespace

std::vector<int> vc_bipartite_exact(const SimpleGraph& g) {
    std::vector<int> color = bipartition(g);
    BipartiteMatching m(g, color);
    m.run();

    // Koenig: alternate from free left vertices (non-matching left->right,
    // matching right->left); cover = unreached left + reached right.
    auto adj = g.adjacency();
    std::vector<char> reached(g.n, 0);
    std::queue<int> q;
    for (int u : m.left)
        if (m.match[u] == -1) {
            reached[u] = 1;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (color[u] == 0) {
            for (int w : adj[u])
                if (m.match[u] != w && !reached[w]) {
                    reached[w] = 1;
                    q.push(w);
                }
        } else if (m.match[u] != -1 && !reached[m.match[u]]) {
            reached[m.match[u]] = 1;
            q.push(m.match[u]);
        }
    }
    std::vector<int> cover;
    for (int v = 0; v < g.n; ++v) {
        if (color[v] == 0 && !reached[v] && m.match[v] != -1) cover.push_back(v);
        if (color[v] == 1 && reached[v]) cover.push_back(v);
    }
    return cover;
}

std::vector<int> vc_bruteforce(const SimpleGraph& g) {
    if (g.n > 24)
        throw InputError("vc_bruteforce refuses n > 24 (got " + std::to_string(g.n) + ")");
    for (int k = 0; k <= g.n; ++k) {
        // combinations of size k in lexicographic order
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            if (g.is_cover(pick)) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == g.n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {}; // unreachable: the full vertex set always covers
}

std::vector<int> minimalize_vc(const SimpleGraph& g, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.n) throw InputError("minimalize_vc: vertex out of range");
    if (!g.is_cover(s)) throw InputError("minimalize_vc: set is not a vertex cover");
    auto adj = g.adjacency();
    std::vector<char> in(g.n, 0);
    for (int v : s) in[v] = 1;
    // drop from the highest id down, so lower ids are preferred to stay
    std::vector<int> sorted(s);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int v : sorted) {
        bool needed = false;
        for (int w : adj[v])
            if (!in[w]) {
                needed = true;
                break;
            }
        if (!needed) in[v] = 0;
    }
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

ListCoverInstance ListCoverInstance::build(SimpleGraph g, std::vector<std::vector<int>> lists) {
    if (static_cast<int>(lists.size()) != g.n)
        throw InputError("list cover: need one list per vertex");
    for (int v = 0; v < g.n; ++v) {
        auto& lv = lists[v];
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
        for (int x : lv)
            if (x < 0 || x >= g.n) throw InputError("list cover: list entry out of range");
        if (!std::binary_search(lv.begin(), lv.end(), v))
            throw InputError("list cover: " + std::to_string(v) + " missing from its own list");
    }
    for (int y = 0; y < g.n; ++y)
        for (int x : lists[y])
            if (!std::includes(lists[y].begin(), lists[y].end(),
                               lists[x].begin(), lists[x].end()))
                throw StructuralError("list property (P1) violated: " + std::to_string(x) +
                                      " in L(" + std::to_string(y) + ") but L(" +
                                      std::to_string(x) + ") is not contained in L(" +
                                      std::to_string(y) + ")");
    return ListCoverInstance{std::move(g), std::move(lists)};
}

MvcReduction mvc_to_vc(const ListCoverInstance& inst) {
    const auto& g = inst.g;
    std::set<int> forced;
    for (auto [x, y] : g.edges) {
        std::vector<int> common;
        std::set_intersection(inst.lists[x].begin(), inst.lists[x].end(),
                              inst.lists[y].begin(), inst.lists[y].end(),
                              std::back_inserter(common));
        forced.insert(common.begin(), common.end());
    }
    std::set<std::pair<int, int>> out_edges;
    for (auto [x, y] : g.edges) {
        if (forced.count(x) || forced.count(y)) continue;
        for (int a : inst.lists[x]) {
            if (forced.count(a)) continue;
            for (int b : inst.lists[y]) {
                if (forced.count(b)) continue;
                out_edges.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
        }
    }
    MvcReduction red;
    red.gprime = SimpleGraph::build(g.n, {out_edges.begin(), out_edges.end()});
    red.forced.assign(forced.begin(), forced.end());
    return red;
}

std::vector<int> mvc_solve_2approx(const ListCoverInstance& inst) {
    MvcReduction red = mvc_to_vc(inst);
    std::vector<int> s = minimalize_vc(red.gprime, vc_2approx(red.gprime));
    s.insert(s.end(), red.forced.begin(), red.forced.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool mvc_is_solution(const ListCoverInstance& inst, const std::vector<int>& s) {
    if (!inst.g.is_cover(s)) return false;
    std::set<int> in(s.begin(), s.end());
    for (int v : s)
        for (int x : inst.lists[v])
            if (!in.count(x)) return false;
    return true;
}

} // namespace hcd
