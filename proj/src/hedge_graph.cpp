#include "hcd/hedge_graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

std::pair<Vertex, Vertex> norm_pair(Vertex u, Vertex v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

bool token_ok(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

HedgeGraph HedgeGraph::build(int n, const std::vector<LabeledEdge>& edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    HedgeGraph h;
    h.n_ = n;
    std::map<std::string, HedgeId> id_of;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string where = "edge " + std::to_string(i + 1);
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InputError(where + ": vertex out of range");
        if (e.u == e.v)
            throw InputError(where + ": self-loop at vertex " + std::to_string(e.u));
        if (!token_ok(e.hedge))
            throw InputError(where + ": bad hedge token '" + e.hedge + "'");
        auto p = norm_pair(e.u, e.v);
        if (!seen.insert(p).second)
            throw InputError(where + ": duplicate edge {" + std::to_string(p.first) +
                             "," + std::to_string(p.second) + "}");
        auto it = id_of.find(e.hedge);
        HedgeId x;
        if (it == id_of.end()) {
            x = static_cast<HedgeId>(h.hedge_names_.size());
            h.hedge_names_.push_back(e.hedge);
            id_of.emplace(e.hedge, x);
        } else {
            x = it->second;
        }
        h.edges_.push_back(p);
        h.edge_hedge_.push_back(x);
    }
    h.finish();
    return h;
}

void HedgeGraph::finish() {
    // sort edges with their hedges
    std::vector<int> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return edges_[a] < edges_[b]; });
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<HedgeId> hs;
    es.reserve(edges_.size());
    hs.reserve(edges_.size());
    for (int i : order) {
        es.push_back(edges_[i]);
        hs.push_back(edge_hedge_[i]);
    }
    edges_ = std::move(es);
    edge_hedge_ = std::move(hs);

    hedge_edges_.assign(hedge_names_.size(), {});
    adj_.assign(n_, {});
    adj_hedge_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        HedgeId x = edge_hedge_[i];
        hedge_edges_[x].push_back(static_cast<int>(i));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        adj_hedge_[u].emplace_back(v, x);
        adj_hedge_[v].emplace_back(u, x);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    for (auto& a : adj_hedge_) std::sort(a.begin(), a.end());
    live_.clear();
    for (HedgeId x = 0; x < static_cast<HedgeId>(hedge_names_.size()); ++x)
        if (!hedge_edges_[x].empty()) live_.push_back(x);
}

const std::string& HedgeGraph::hedge_token(HedgeId x) const {
    if (x < 0 || x >= static_cast<HedgeId>(hedge_names_.size()))
        throw InputError("unknown hedge id " + std::to_string(x));
    return hedge_names_[x];
}

std::optional<HedgeId> HedgeGraph::hedge_by_token(const std::string& token) const {
    for (HedgeId x : live_)
        if (hedge_names_[x] == token) return x;
    return std::nullopt;
}

const std::vector<int>& HedgeGraph::hedge_edges(HedgeId x) const {
    if (x < 0 || x >= static_cast<HedgeId>(hedge_edges_.size()))
        throw InputError("unknown hedge id " + std::to_string(x));
    return hedge_edges_[x];
}

bool HedgeGraph::has_edge(Vertex u, Vertex v) const {
    return hedge_of(u, v).has_value();
}

std::optional<HedgeId> HedgeGraph::hedge_of(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    const auto& a = adj_hedge_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(v, HedgeId{0}),
                               [](const auto& p, const auto& q) { return p.first < q.first; });
    if (it != a.end() && it->first == v) return it->second;
    return std::nullopt;
}

const std::vector<Vertex>& HedgeGraph::neighbors(Vertex v) const {
    return adj_[v];
}

std::vector<std::vector<Vertex>> HedgeGraph::components() const {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool HedgeGraph::is_live(HedgeId x) const {
    return x >= 0 && x < static_cast<HedgeId>(hedge_edges_.size()) && !hedge_edges_[x].empty();
}

HedgeGraph HedgeGraph::remove_hedges(const std::vector<HedgeId>& u) const {
    std::vector<char> drop(hedge_names_.size(), 0);
    for (HedgeId x : u) {
        if (!is_live(x))
            throw InputError("unknown hedge id " + std::to_string(x));
        drop[x] = 1;
    }
    HedgeGraph h;
    h.n_ = n_;
    h.hedge_names_ = hedge_names_;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (drop[edge_hedge_[i]]) continue;
        h.edges_.push_back(edges_[i]);
        h.edge_hedge_.push_back(edge_hedge_[i]);
    }
    h.finish();
    return h;
}

std::uint64_t HedgeGraph::fingerprint() const {
    std::uint64_t f = 1469598103934665603ULL;
    auto mix = [&f](std::uint64_t v) {
        f ^= v;
        f *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        mix(static_cast<std::uint64_t>(edges_[i].first) + 1);
        mix(static_cast<std::uint64_t>(edges_[i].second) + 1);
        for (char c : hedge_names_[edge_hedge_[i]]) mix(static_cast<unsigned char>(c));
        mix(0x2f);
    }
    return f;
}

TripleCatalog enumerate_triples(const HedgeGraph& h) {
    TripleCatalog cat;
    for (const auto& comp : h.components()) {
        if (comp.size() < 3) continue;
        const int k = static_cast<int>(comp.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l) {
                    Vertex a = comp[i], b = comp[j], c = comp[l];
                    auto ab = h.hedge_of(a, b), ac = h.hedge_of(a, c), bc = h.hedge_of(b, c);
                    int deg = (ab ? 1 : 0) + (ac ? 1 : 0) + (bc ? 1 : 0);
                    if (deg == 3) {
                        K3Entry t;
                        t.a = a; t.b = b; t.c = c;
                        t.ab = *ab; t.ac = *ac; t.bc = *bc;
                        std::set<HedgeId> hs{*ab, *ac, *bc};
                        t.hedge_count = static_cast<int>(hs.size());
                        if (t.hedge_count == 2) {
                            // the hedge covering two of the three edges
                            if (*ab == *ac) t.doubled = *ab;
                            else if (*ab == *bc) t.doubled = *ab;
                            else t.doubled = *ac;
                        }
                        cat.k3s.push_back(t);
                    } else if (deg == 2) {
                        P3Entry t;
                        if (!ab) { t.a = a; t.b = c; t.c = b; t.left = *ac; t.right = *bc; }
                        else if (!ac) { t.a = a; t.b = b; t.c = c; t.left = *ab; t.right = *bc; }
                        else { t.a = b; t.b = a; t.c = c; t.left = *ab; t.right = *ac; }
                        if (t.a > t.c) { std::swap(t.a, t.c); std::swap(t.left, t.right); }
                        t.kind = t.left == t.right ? P3Kind::internal : P3Kind::simple;
                        cat.p3s.push_back(t);
                    }
                }
    }
    std::sort(cat.p3s.begin(), cat.p3s.end(), [](const P3Entry& x, const P3Entry& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    std::sort(cat.k3s.begin(), cat.k3s.end(), [](const K3Entry& x, const K3Entry& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return cat;
}

Verdict validate_solution(const HedgeGraph& h, const std::vector<HedgeId>& u) {
    HedgeGraph residual = h.remove_hedges(u);
    TripleCatalog cat = enumerate_triples(residual);
    Verdict v;
    if (cat.p3s.empty()) {
        v.valid = true;
    } else {
        const P3Entry& w = cat.p3s.front();
        v.valid = false;
        v.witness = std::array<Vertex, 3>{w.a, w.b, w.c};
    }
    return v;
}

HedgeGraph normalize(const HedgeGraph& h) {
    TripleCatalog cat = enumerate_triples(h);
    std::vector<LabeledEdge> edges;
    int base = 0;
    for (const auto& t : cat.p3s) {
        edges.push_back({base, base + 1, h.hedge_token(t.left)});
        edges.push_back({base + 1, base + 2, h.hedge_token(t.right)});
        base += 3;
    }
    for (const auto& t : cat.k3s) {
        edges.push_back({base, base + 1, h.hedge_token(t.ab)});
        edges.push_back({base, base + 2, h.hedge_token(t.ac)});
        edges.push_back({base + 1, base + 2, h.hedge_token(t.bc)});
        base += 3;
    }
    return HedgeGraph::build(base, edges);
}

std::vector<HedgeId> forced_closure(const HedgeGraph& h) {
    std::vector<HedgeId> result;
    HedgeGraph residual = h;
    for (;;) {
        TripleCatalog cat = enumerate_triples(residual);
        std::set<HedgeId> forced;
        for (const auto& t : cat.p3s)
            if (t.kind == P3Kind::internal) forced.insert(t.left);
        if (forced.empty()) break;
        std::vector<HedgeId> step(forced.begin(), forced.end());
        result.insert(result.end(), step.begin(), step.end());
        residual = residual.remove_hedges(step);
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Exhaustive F3-packing search in lexicographic order, stopping as soon as
// `limit` disjoint triples are found. Returns the first (hence lex-least)
// packing of the maximum size reached.
struct PackingSearch {
    const std::vector<std::array<Vertex, 3>>& triples;
    int limit;
    int n;
    std::vector<char> used;
    std::vector<int> current;
    std::vector<int> best;

    PackingSearch(const std::vector<std::array<Vertex, 3>>& t, int limit, int n)
        : triples(t), limit(limit), n(n), used(n, 0) {}

    void run(std::size_t from) {
        if (static_cast<int>(current.size()) > static_cast<int>(best.size())) best = current;
        if (static_cast<int>(best.size()) >= limit) return;
        for (std::size_t i = from; i < triples.size(); ++i) {
            const auto& t = triples[i];
            if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
            used[t[0]] = used[t[1]] = used[t[2]] = 1;
            current.push_back(static_cast<int>(i));
            run(i + 1);
            current.pop_back();
            used[t[0]] = used[t[1]] = used[t[2]] = 0;
            if (static_cast<int>(best.size()) >= limit) return;
        }
    }
};

} // namespace

StructuralStats structural_stats(const HedgeGraph& h, int delta_cap) {
    if (delta_cap < 0) throw InputError("delta cap must be non-negative");
    StructuralStats s;
    s.delta_cap = delta_cap;
    TripleCatalog cat = enumerate_triples(h);
    for (const auto& t : cat.k3s)
        if (t.hedge_count == 3) {
            s.bi_hedge = false;
            s.three_hedge_triangle = std::array<Vertex, 3>{t.a, t.b, t.c};
            break;
        }

    // connected three-vertex subgraphs = catalogued triples by vertex set
    std::vector<std::array<Vertex, 3>> triples;
    for (const auto& t : cat.p3s) {
        std::array<Vertex, 3> v{t.a, t.b, t.c};
        std::sort(v.begin(), v.end());
        triples.push_back(v);
    }
    for (const auto& t : cat.k3s) triples.push_back({t.a, t.b, t.c});
    std::sort(triples.begin(), triples.end());

    PackingSearch search(triples, delta_cap + 1, h.vertex_count());
    search.run(0);
    if (static_cast<int>(search.best.size()) > delta_cap) {
        s.delta_exceeds_cap = true;
    } else {
        s.delta_max = static_cast<int>(search.best.size());
        for (int i : search.best) s.packing.push_back(triples[i]);
    }
    return s;
}

} // namespace hcd
