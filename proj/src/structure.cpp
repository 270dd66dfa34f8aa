#include "hcd/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hcd/errors.hpp"

namespace hcd {

int DominationIndex::slot(HedgeId x) const {
    if (x < 0 || x >= static_cast<HedgeId>(slot_.size()) || slot_[x] < 0)
        throw InputError("unknown hedge id " + std::to_string(x));
    return slot_[x];
}

const std::vector<K3Entry>& DominationIndex::sk3(HedgeId x) const { return sk3_[slot(x)]; }
const std::vector<HedgeId>& DominationIndex::d(HedgeId x) const { return d_[slot(x)]; }
const std::vector<HedgeId>& DominationIndex::r(HedgeId x) const { return r_[slot(x)]; }

DominationIndex build_domination(const HedgeGraph& h) {
    TripleCatalog cat = enumerate_triples(h);
    for (const auto& t : cat.k3s)
        if (t.hedge_count == 3)
            throw StructuralError(
                "not bi-hedge: triangle {" + std::to_string(t.a) + "," +
                std::to_string(t.b) + "," + std::to_string(t.c) +
                "} is covered by three hedges");

    DominationIndex dom;
    dom.hedges = h.hedges();
    const int l = static_cast<int>(dom.hedges.size());
    int max_id = dom.hedges.empty() ? -1 : dom.hedges.back();
    dom.slot_.assign(max_id + 1, -1);
    for (int i = 0; i < l; ++i) dom.slot_[dom.hedges[i]] = i;
    dom.sk3_.assign(l, {});
    dom.d_.assign(l, {});
    dom.r_.assign(l, {});

    // arcs doubled -> single: deleting the single-edge hedge exposes an
    // internal P3 of the doubled hedge
    std::vector<std::vector<int>> preds(l); // per slot: slots z with z in D(slot)
    for (const auto& t : cat.k3s) {
        if (t.hedge_count != 2) continue;
        HedgeId dbl = *t.doubled;
        HedgeId single = t.ab != dbl ? t.ab : (t.ac != dbl ? t.ac : t.bc);
        int s = dom.slot_[single];
        dom.sk3_[s].push_back(t);
        preds[s].push_back(dom.slot_[dbl]);
    }
    for (int i = 0; i < l; ++i) {
        std::set<HedgeId> ds;
        for (int p : preds[i]) ds.insert(dom.hedges[p]);
        dom.d_[i].assign(ds.begin(), ds.end());
    }
    // r(x): reverse reachability over the arcs, plus x itself
    for (int i = 0; i < l; ++i) {
        std::vector<char> seen(l, 0);
        std::vector<int> stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int p : preds[v])
                if (!seen[p]) {
                    seen[p] = 1;
                    stack.push_back(p);
                }
        }
        for (int j = 0; j < l; ++j)
            if (seen[j]) dom.r_[i].push_back(dom.hedges[j]);
    }
    return dom;
}

HedgeIntersectionGraph build_intersection_graph(const HedgeGraph& h) {
    TripleCatalog cat = enumerate_triples(h);
    std::map<std::pair<HedgeId, HedgeId>, std::pair<bool, bool>> spans; // (p3, k3)
    auto key = [](HedgeId a, HedgeId b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& t : cat.p3s)
        if (t.left != t.right) spans[key(t.left, t.right)].first = true;
    for (const auto& t : cat.k3s) {
        HedgeId hs[3] = {t.ab, t.ac, t.bc};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (hs[i] != hs[j]) spans[key(hs[i], hs[j])].second = true;
    }
    HedgeIntersectionGraph f;
    f.vertices = h.hedges();
    for (const auto& [pair, sp] : spans) {
        HedgeIntersectionGraph::Edge e;
        e.x = pair.first;
        e.y = pair.second;
        e.type = sp.first ? (sp.second ? IntersectionType::p3_and_k3 : IntersectionType::p3_only)
                          : IntersectionType::k3_only;
        f.edges.push_back(e);
    }
    return f;
}

std::optional<IntersectionType> HedgeIntersectionGraph::type_of(HedgeId x, HedgeId y) const {
    if (x > y) std::swap(x, y);
    for (const auto& e : edges)
        if (e.x == x && e.y == y) return e.type;
    return std::nullopt;
}

std::vector<HedgeId> mixed_vertices(const HedgeIntersectionGraph& f,
                                    const DominationIndex& dom) {
    std::set<HedgeId> mixed;
    for (const auto& e : f.edges) {
        if (e.type != IntersectionType::p3_and_k3) continue;
        const auto& dy = dom.d(e.y);
        const auto& dx = dom.d(e.x);
        if (std::binary_search(dy.begin(), dy.end(), e.x)) mixed.insert(e.x);
        if (std::binary_search(dx.begin(), dx.end(), e.y)) mixed.insert(e.y);
    }
    return {mixed.begin(), mixed.end()};
}

std::optional<std::vector<HedgeId>> find_cycle(const HedgeIntersectionGraph& f) {
    const int l = static_cast<int>(f.vertices.size());
    std::map<HedgeId, int> slot;
    for (int i = 0; i < l; ++i) slot[f.vertices[i]] = i;
    std::vector<std::vector<int>> adj(l);
    for (const auto& e : f.edges) {
        adj[slot.at(e.x)].push_back(slot.at(e.y));
        adj[slot.at(e.y)].push_back(slot.at(e.x));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> parent(l, -2);
    for (int s = 0; s < l; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<std::pair<int, int>> stack{{s, -1}}; // (vertex, from)
        while (!stack.empty()) {
            auto [v, from] = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (w == from) continue;
                if (parent[w] != -2) {
                    // back edge v-w: walk both up to their meeting point
                    std::vector<int> pv{v}, pw{w};
                    std::set<int> on_pv{v};
                    for (int x = v; parent[x] >= 0; x = parent[x]) {
                        pv.push_back(parent[x]);
                        on_pv.insert(parent[x]);
                    }
                    while (!on_pv.count(pw.back())) pw.push_back(parent[pw.back()]);
                    std::vector<HedgeId> cycle;
                    for (int x : pv) {
                        cycle.push_back(f.vertices[x]);
                        if (x == pw.back()) break;
                    }
                    for (int i = static_cast<int>(pw.size()) - 2; i >= 0; --i)
                        cycle.push_back(f.vertices[pw[i]]);
                    return cycle;
                }
                parent[w] = v;
                stack.emplace_back(w, v);
            }
        }
    }
    return std::nullopt;
}

bool is_acyclic(const HedgeIntersectionGraph& f) { return !find_cycle(f).has_value(); }

} // namespace hcd
