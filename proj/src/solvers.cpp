#include "hcd/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

// Catalog constraints over hedge slots, for fast subset checks: a deleted
// set is valid iff every P3 loses an edge and no triangle loses exactly one.
struct TripleSystem {
    std::vector<HedgeId> hedges; // sorted live ids
    std::vector<std::pair<int, int>> p3s;      // slots (left, right)
    std::vector<std::array<int, 3>> k3s;       // per-edge slots

    static TripleSystem of(const HedgeGraph& h) {
        TripleSystem ts;
        ts.hedges = h.hedges();
        std::map<HedgeId, int> slot;
        for (std::size_t i = 0; i < ts.hedges.size(); ++i)
            slot[ts.hedges[i]] = static_cast<int>(i);
        TripleCatalog cat = enumerate_triples(h);
        for (const auto& t : cat.p3s) ts.p3s.emplace_back(slot.at(t.left), slot.at(t.right));
        for (const auto& t : cat.k3s)
            ts.k3s.push_back({slot.at(t.ab), slot.at(t.ac), slot.at(t.bc)});
        return ts;
    }

    bool valid(std::uint32_t mask) const {
        for (auto [i, j] : p3s)
            if (!((mask >> i) & 1u) && !((mask >> j) & 1u)) return false;
        for (const auto& k : k3s) {
            int deleted = ((mask >> k[0]) & 1u) + ((mask >> k[1]) & 1u) + ((mask >> k[2]) & 1u);
            if (deleted == 1) return false;
        }
        return true;
    }
};

Solution make_solution(const HedgeGraph& h, std::vector<HedgeId> deleted) {
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    return Solution{std::move(deleted), h.fingerprint()};
}

void check_sound(const HedgeGraph& h, const std::vector<HedgeId>& u, const char* who) {
    if (!validate_solution(h, u).valid)
        throw std::logic_error(std::string(who) + " produced an invalid solution");
}

} // namespace

Solution solve_bruteforce(const HedgeGraph& h) {
    const int l = h.hedge_count();
    if (l > 24)
        throw InputError("solve_bruteforce refuses more than 24 hedges (got " +
                         std::to_string(l) + ")");
    TripleSystem ts = TripleSystem::of(h);
    for (int k = 0; k <= l; ++k) {
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint32_t mask = 0;
            for (int i : pick) mask |= 1u << i;
            if (ts.valid(mask)) {
                std::vector<HedgeId> u;
                for (int i : pick) u.push_back(ts.hedges[i]);
                return make_solution(h, std::move(u));
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == l - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("solve_bruteforce: deleting every hedge must be valid");
}

namespace {

bool fpt_search(const HedgeGraph& residual, int budget, std::vector<HedgeId>& acc,
                FptStats* stats, int depth) {
    if (stats) {
        ++stats->nodes;
        stats->max_depth = std::max(stats->max_depth, depth);
    }
    std::vector<HedgeId> forced = forced_closure(residual);
    if (static_cast<int>(forced.size()) > budget) return false;
    HedgeGraph rest = forced.empty() ? residual : residual.remove_hedges(forced);
    budget -= static_cast<int>(forced.size());

    TripleCatalog cat = enumerate_triples(rest);
    if (cat.p3s.empty()) {
        acc.insert(acc.end(), forced.begin(), forced.end());
        return true;
    }
    if (budget == 0) return false;

    const P3Entry& p = cat.p3s.front();
    std::vector<HedgeId> branches{p.left};
    if (p.right != p.left) branches.push_back(p.right);
    if (stats) stats->max_children = std::max(stats->max_children,
                                              static_cast<int>(branches.size()));
    for (HedgeId x : branches) {
        std::size_t mark = acc.size();
        acc.push_back(x);
        if (fpt_search(rest.remove_hedges({x}), budget - 1, acc, stats, depth + 1)) {
            acc.insert(acc.end(), forced.begin(), forced.end());
            return true;
        }
        acc.resize(mark);
    }
    return false;
}

} // namespace

std::optional<Solution> solve_fpt(const HedgeGraph& h, int k, FptStats* stats) {
    if (k < 0) throw InputError("budget must be non-negative");
    std::vector<HedgeId> acc;
    if (!fpt_search(h, k, acc, stats, 0)) return std::nullopt;
    return make_solution(h, std::move(acc));
}

namespace {

// Set-partition enumeration of the packed vertices in restricted-growth
// order; parts that are not cliques are pruned as soon as they form.
struct DeltaEnumerator {
    const HedgeGraph& h;
    const std::vector<Vertex>& vd;   // packed vertices, sorted
    std::vector<Vertex> rest;        // everything else

    std::vector<std::vector<Vertex>> parts;
    std::vector<char> used; // rest vertices currently taken by an extension

    long best_cost = -1;
    std::vector<HedgeId> best_deleted;

    DeltaEnumerator(const HedgeGraph& g, const std::vector<Vertex>& packed)
        : h(g), vd(packed), used(g.vertex_count(), 0) {
        std::vector<char> in_vd(g.vertex_count(), 0);
        for (Vertex v : vd) in_vd[v] = 1;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!in_vd[v]) rest.push_back(v);
        // maximality of the packing leaves at most a matching outside it
        for (auto [u, v] : h.edges())
            if (!in_vd[u] && !in_vd[v]) {
                int du = 0, dv = 0;
                for (Vertex w : h.neighbors(u)) du += !in_vd[w];
                for (Vertex w : h.neighbors(v)) dv += !in_vd[w];
                if (du > 1 || dv > 1)
                    throw std::logic_error(
                        "delta solver: leftover graph is not an induced matching");
            }
    }

    bool adjacent_to_all(Vertex w, const std::vector<Vertex>& part) const {
        for (Vertex v : part)
            if (!h.has_edge(w, v)) return false;
        return true;
    }

    void run() {
        partition_step(0);
    }

    void partition_step(std::size_t i) {
        if (i == vd.size()) {
            extend_step(0);
            return;
        }
        Vertex v = vd[i];
        const std::size_t count = parts.size(); // recursion grows parts past here
        for (std::size_t pi = 0; pi < count; ++pi) {
            if (!adjacent_to_all(v, parts[pi])) continue;
            parts[pi].push_back(v);
            partition_step(i + 1);
            parts[pi].pop_back();
        }
        parts.push_back({v});
        partition_step(i + 1);
        parts.pop_back();
    }

    void extend_step(std::size_t pi) {
        if (pi == parts.size()) {
            evaluate();
            return;
        }
        extend_step(pi + 1); // no extension
        const auto& part = parts[pi];
        std::vector<Vertex> cand;
        for (Vertex w : rest)
            if (!used[w] && adjacent_to_all(w, part)) cand.push_back(w);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            Vertex w = cand[a];
            used[w] = 1;
            parts[pi].push_back(w);
            extend_step(pi + 1);
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                Vertex w2 = cand[b];
                if (used[w2] || !h.has_edge(w, w2)) continue;
                used[w2] = 1;
                parts[pi].push_back(w2);
                extend_step(pi + 1);
                parts[pi].pop_back();
                used[w2] = 0;
            }
            parts[pi].pop_back();
            used[w] = 0;
        }
    }

    void evaluate() {
        // cluster id per vertex: parts first, then leftover matching pairs,
        // then singletons; edges inside a cluster form the candidate core
        std::vector<int> cluster(h.vertex_count(), -1);
        int cid = 0;
        for (const auto& part : parts) {
            for (Vertex v : part) cluster[v] = cid;
            ++cid;
        }

        const auto& edges = h.edges();
        const int m = static_cast<int>(edges.size());
        // 0 = out, 1 = core, 2 = free pair edge
        std::vector<char> state(m, 0);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edges[e];
            if (cluster[u] >= 0 && cluster[u] == cluster[v])
                state[e] = 1;
            else if (cluster[u] < 0 && cluster[v] < 0)
                state[e] = 2;
        }
        // a hedge is kept iff all of its edges are core or free; free edges
        // of kept hedges stay, every other free edge is dropped
        std::vector<HedgeId> deleted;
        bool feasible = true;
        for (HedgeId x : h.hedges()) {
            bool keepable = true, has_core = false;
            for (int e : h.hedge_edges(x)) {
                if (state[e] == 0) keepable = false;
                if (state[e] == 1) has_core = true;
            }
            if (keepable) continue;      // hedge fully inside the candidate
            if (has_core) {              // split hedge: candidate infeasible
                feasible = false;
                break;
            }
            deleted.push_back(x);
        }
        if (!feasible) return;
        long cost = static_cast<long>(deleted.size());
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_deleted = std::move(deleted);
        }
    }
};

} // namespace

Solution solve_delta_bounded(const HedgeGraph& h, int cap) {
    StructuralStats stats = structural_stats(h, cap);
    if (stats.delta_exceeds_cap)
        throw StructuralError("delta_max exceeds cap " + std::to_string(cap) +
                              ": found a packing of size " + std::to_string(cap + 1));
    std::vector<Vertex> vd;
    for (const auto& t : stats.packing) vd.insert(vd.end(), t.begin(), t.end());
    std::sort(vd.begin(), vd.end());

    DeltaEnumerator en(h, vd);
    en.run();
    if (en.best_cost < 0)
        throw std::logic_error("delta solver: no feasible clustering found");
    Solution s = make_solution(h, std::move(en.best_deleted));
    check_sound(h, s.deleted, "solve_delta_bounded");
    return s;
}

Solution solve_approx2_bihedge(const HedgeGraph& h) {
    {
        TripleCatalog cat = enumerate_triples(h);
        for (const auto& t : cat.k3s)
            if (t.hedge_count == 3)
                throw StructuralError(
                    "not bi-hedge: triangle {" + std::to_string(t.a) + "," +
                    std::to_string(t.b) + "," + std::to_string(t.c) +
                    "} is covered by three hedges");
    }
    std::vector<HedgeId> forced = forced_closure(h);
    HedgeGraph residual = forced.empty() ? h : h.remove_hedges(forced);

    DominationIndex dom = build_domination(residual);
    const auto& hs = dom.hedges;
    const int l = static_cast<int>(hs.size());
    std::map<HedgeId, int> slot;
    for (int i = 0; i < l; ++i) slot[hs[i]] = i;

    std::set<std::pair<int, int>> cover_edges;
    for (const auto& t : enumerate_triples(residual).p3s) {
        if (t.kind == P3Kind::internal)
            throw std::logic_error("approx2: internal P3 survived the forced closure");
        int a = slot.at(t.left), b = slot.at(t.right);
        cover_edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::vector<int>> lists(l);
    for (int i = 0; i < l; ++i)
        for (HedgeId x : dom.r(hs[i])) lists[i].push_back(slot.at(x));
    ListCoverInstance inst = ListCoverInstance::build(
        SimpleGraph::build(l, {cover_edges.begin(), cover_edges.end()}), std::move(lists));

    std::vector<HedgeId> u = forced;
    for (int i : mvc_solve_2approx(inst)) u.push_back(hs[i]);
    Solution s = make_solution(h, std::move(u));
    check_sound(h, s.deleted, "solve_approx2_bihedge");
    return s;
}

AcyclicDecomposition acyclic_decomposition(const HedgeGraph& h) {
    if (auto cycle = find_cycle(build_intersection_graph(h))) {
        std::string witness;
        for (HedgeId x : *cycle) witness += h.hedge_token(x) + " ";
        throw StructuralError("hedge intersection graph has a cycle: " + witness);
    }

    // forced hedges to a fixpoint: removing one batch can expose further
    // internal P3's and mixed vertices in the residual
    std::vector<HedgeId> forced;
    HedgeGraph residual = h;
    for (;;) {
        std::set<HedgeId> step;
        TripleCatalog cat = enumerate_triples(residual);
        for (const auto& t : cat.p3s)
            if (t.kind == P3Kind::internal) step.insert(t.left);
        DominationIndex dom = build_domination(residual);
        HedgeIntersectionGraph f = build_intersection_graph(residual);
        for (HedgeId x : mixed_vertices(f, dom)) step.insert(x);
        if (step.empty()) break;
        std::vector<HedgeId> batch(step.begin(), step.end());
        forced.insert(forced.end(), batch.begin(), batch.end());
        residual = residual.remove_hedges(batch);
    }
    std::sort(forced.begin(), forced.end());

    AcyclicDecomposition out;
    out.forced = std::move(forced);
    out.residual = residual;
    out.f1 = build_intersection_graph(residual);

    const auto& hs = residual.hedges();
    const int l = static_cast<int>(hs.size());
    out.f2_hedges = hs;
    std::map<HedgeId, int> slot;
    for (int i = 0; i < l; ++i) slot[hs[i]] = i;

    // components of F1 under triangle-type edges only
    std::vector<int> comp(l, -1);
    {
        std::vector<std::vector<int>> adj(l);
        for (const auto& e : out.f1.edges) {
            if (e.type == IntersectionType::p3_and_k3)
                throw std::logic_error("acyclic solver: both-type edge survived the fixpoint");
            if (e.type != IntersectionType::k3_only) continue;
            adj[slot.at(e.x)].push_back(slot.at(e.y));
            adj[slot.at(e.y)].push_back(slot.at(e.x));
        }
        int next = 0;
        for (int s = 0; s < l; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = next;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v])
                    if (comp[w] < 0) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
    }
    out.component = comp;

    DominationIndex dom = build_domination(residual);
    for (int i = 0; i < l; ++i)
        for (HedgeId x : dom.r(hs[i]))
            if (comp[slot.at(x)] != comp[i])
                throw std::logic_error(
                    "acyclic solver: domination escapes its triangle component");

    std::set<std::pair<int, int>> comp_links;
    std::set<std::pair<int, int>> f2_edges;
    for (const auto& e : out.f1.edges) {
        if (e.type != IntersectionType::p3_only) continue;
        int sx = slot.at(e.x), sy = slot.at(e.y);
        if (comp[sx] == comp[sy])
            throw std::logic_error("acyclic solver: P3-type edge inside a component");
        auto link = std::minmax(comp[sx], comp[sy]);
        if (!comp_links.insert({link.first, link.second}).second)
            throw std::logic_error(
                "acyclic solver: two P3-type edges between the same components");
        for (HedgeId a : dom.r(e.x))
            for (HedgeId b : dom.r(e.y)) {
                int sa = slot.at(a), sb = slot.at(b);
                if (comp[sa] == comp[sb])
                    throw std::logic_error(
                        "acyclic solver: expansion edge inside a component");
                f2_edges.insert({std::min(sa, sb), std::max(sa, sb)});
            }
    }
    out.f2 = SimpleGraph::build(l, {f2_edges.begin(), f2_edges.end()});
    return out;
}

Solution solve_acyclic(const HedgeGraph& h) {
    AcyclicDecomposition dec = acyclic_decomposition(h);
    std::vector<int> cover;
    try {
        cover = vc_bipartite_exact(dec.f2);
    } catch (const StructuralError& e) {
        throw std::logic_error(std::string("acyclic solver: F2 is not bipartite: ") + e.what());
    }
    std::vector<HedgeId> u = dec.forced;
    for (int i : cover) u.push_back(dec.f2_hedges[i]);
    Solution s = make_solution(h, std::move(u));
    check_sound(h, s.deleted, "solve_acyclic");
    return s;
}

} // namespace hcd
