#include "hcd/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hcd/errors.hpp"
#include "hcd/structure.hpp"

namespace hcd {

namespace {

// mt19937_64 output is fully specified, so instances are reproducible
// across standard libraries; distributions are avoided for the same reason.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t k) { return eng() % k; }
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

SimpleGraph random_simple_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return SimpleGraph::build(n, std::move(edges));
}

std::string pool_token(std::uint64_t i) { return "h" + std::to_string(i + 1); }

HedgeGraph gen_deltap3(Rng& rng, int n, double p) {
    return vc_to_hcd(random_simple_graph(rng, n, p)).graph;
}

HedgeGraph gen_random(Rng& rng, int n, int hedges, double p) {
    std::vector<LabeledEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p))
                edges.push_back({u, v, pool_token(rng.below(hedges))});
    return HedgeGraph::build(n, edges);
}

HedgeGraph gen_bihedge(Rng& rng, int components, int pool) {
    std::vector<LabeledEdge> edges;
    int base = 0;
    for (int c = 0; c < components; ++c) {
        std::string a = pool_token(rng.below(pool));
        std::string b = pool > 1 ? pool_token(rng.below(pool)) : a;
        switch (rng.below(4)) {
            case 0: // simple P3 (internal when the pool collapses a and b)
                edges.push_back({base, base + 1, a});
                edges.push_back({base + 1, base + 2, b});
                break;
            case 1: // internal P3
                edges.push_back({base, base + 1, a});
                edges.push_back({base + 1, base + 2, a});
                break;
            case 2: // two-hedge triangle, a doubled
                edges.push_back({base, base + 1, a});
                edges.push_back({base, base + 2, a});
                edges.push_back({base + 1, base + 2, b});
                break;
            default: // one-hedge triangle
                edges.push_back({base, base + 1, a});
                edges.push_back({base, base + 2, a});
                edges.push_back({base + 1, base + 2, a});
                break;
        }
        base += 3;
    }
    return HedgeGraph::build(base, edges);
}

HedgeGraph gen_acyclic(Rng& rng, int pool) {
    std::vector<LabeledEdge> edges;
    int base = 0;
    auto triangle = [&](const std::string& dbl, const std::string& single) {
        edges.push_back({base, base + 1, dbl});
        edges.push_back({base, base + 2, dbl});
        edges.push_back({base + 1, base + 2, single});
        base += 3;
    };
    auto path = [&](const std::string& left, const std::string& right) {
        edges.push_back({base, base + 1, left});
        edges.push_back({base + 1, base + 2, right});
        base += 3;
    };

    if (pool < 2 || rng.below(2) == 0) {
        // random forest on the token pool; each tree edge is realized as a
        // two-hedge triangle, a simple P3, or both (a mixed pair)
        for (int i = 1; i < pool; ++i) {
            if (rng.chance(0.25)) continue; // leave i in its own tree
            std::string child = pool_token(i);
            std::string parent = pool_token(rng.below(i));
            switch (rng.below(4)) {
                case 0: triangle(parent, child); break;
                case 1: triangle(child, parent); break;
                case 2: path(parent, child); break;
                default: { // mixed pair: the doubled side becomes forced
                    bool flip = rng.below(2) != 0;
                    triangle(flip ? parent : child, flip ? child : parent);
                    path(parent, child);
                    break;
                }
            }
        }
        // a few internal P3's to exercise the forced closure
        for (int i = 0; i < pool; ++i)
            if (rng.chance(0.2)) {
                std::string t = pool_token(rng.below(pool));
                path(t, t);
            }
        if (edges.empty()) path(pool_token(0), pool_token(0));
    } else {
        // subgraph of a clique: a perfect matching in distinct hedges, all
        // other surviving edges in one shared hedge (a star in F)
        int half = 2 + rng.below(3); // 4..8 vertices
        int n = 2 * half;
        for (int i = 0; i < half; ++i)
            edges.push_back({2 * i, 2 * i + 1, "m" + std::to_string(i + 1)});
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (u / 2 == v / 2) continue; // matching pair
                if (rng.chance(0.35)) continue;
                edges.push_back({u, v, "c0"});
            }
        base = n;
    }
    HedgeGraph h = HedgeGraph::build(base, edges);
    if (!is_acyclic(build_intersection_graph(h)))
        throw std::logic_error("acyclic generator produced a cyclic intersection graph");
    return h;
}

HedgeGraph gen_hosted(Rng& rng, int core_n, double p, HostKind kind, bool kind_set,
                      int host_size) {
    HedgeGraph core = gen_deltap3(rng, core_n, p);
    int dprime = core.vertex_count() / 3;
    if (!kind_set) kind = rng.below(2) ? HostKind::clique : HostKind::path;
    if (host_size == 0)
        host_size = 3 * (dprime + 1) + 3 * static_cast<int>(rng.below(3));
    return embed_host(core, kind, host_size);
}

} // namespace

HedgeGraph generate(const InstanceFamily& spec) {
    Rng rng(spec.seed);
    int n = spec.n;
    int hedges = spec.hedges;
    double p = spec.density;
    if (p < 0.0 || p > 1.0) throw InputError("density must be in [0,1]");
    switch (spec.family) {
        case Family::deltap3:
            if (n <= 0) n = 5;
            if (p == 0.0) p = 0.5;
            return gen_deltap3(rng, n, p);
        case Family::random_partition:
            if (n <= 0) n = 7;
            if (hedges <= 0) hedges = 6;
            if (p == 0.0) p = 0.35;
            return gen_random(rng, n, hedges, p);
        case Family::bihedge: {
            if (n <= 0) n = 12;
            if (hedges <= 0) hedges = std::max(2, n / 3);
            int components = std::max(1, n / 3);
            return gen_bihedge(rng, components, hedges);
        }
        case Family::acyclic:
            if (hedges <= 0) hedges = 6;
            return gen_acyclic(rng, hedges);
        case Family::hosted:
            if (n <= 0) n = 4;
            if (p == 0.0) p = 0.5;
            return gen_hosted(rng, n, p, spec.host_kind, spec.host_kind_set,
                              spec.host_size);
    }
    throw InputError("unknown instance family");
}

} // namespace hcd
