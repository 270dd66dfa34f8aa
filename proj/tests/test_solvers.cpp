#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcd/errors.hpp"
#include "hcd/generate.hpp"
#include "hcd/solvers.hpp"
#include "oracles.hpp"

using namespace hcd;

namespace {

HedgeGraph cluster_input() {
    // a one-hedge triangle plus a lone edge: already a cluster graph
    return HedgeGraph::build(5, {{0, 1, "A"}, {0, 2, "A"}, {1, 2, "A"}, {3, 4, "B"}});
}

HedgeGraph gen(Family family, std::uint64_t seed, int n = 0, int hedges = 0) {
    InstanceFamily spec;
    spec.family = family;
    spec.seed = seed;
    spec.n = n;
    spec.hedges = hedges;
    return generate(spec);
}

// K_{2t} with a distinctly-hedged perfect matching, everything else in one
// hedge; optionally with a few non-matching edges removed.
HedgeGraph clique_matching(int half, const std::vector<std::pair<int, int>>& removed) {
    std::set<std::pair<int, int>> skip(removed.begin(), removed.end());
    std::vector<LabeledEdge> edges;
    for (int i = 0; i < half; ++i)
        edges.push_back({2 * i, 2 * i + 1, "m" + std::to_string(i + 1)});
    for (int u = 0; u < 2 * half; ++u)
        for (int v = u + 1; v < 2 * half; ++v) {
            if (u / 2 == v / 2) continue;
            if (skip.count({u, v})) continue;
            edges.push_back({u, v, "c0"});
        }
    return HedgeGraph::build(2 * half, edges);
}

} // namespace

TEST_CASE("solve_bruteforce examples") {
    Solution s = solve_bruteforce(oracle::inst_p3_ab());
    CHECK(s.deleted == std::vector<HedgeId>{0}); // {A} comes first in subset order
    CHECK(s.source_fingerprint == oracle::inst_p3_ab().fingerprint());

    CHECK(solve_bruteforce(cluster_input()).deleted.empty());
    CHECK(solve_bruteforce(oracle::chained_triangles()).deleted.size() == 3);

    std::vector<LabeledEdge> many;
    for (int i = 0; i < 25; ++i)
        many.push_back({3 * i, 3 * i + 1, "h" + std::to_string(i)});
    CHECK_THROWS_AS(solve_bruteforce(HedgeGraph::build(80, many)), InputError);
}

TEST_CASE("solve_fpt examples") {
    CHECK_FALSE(solve_fpt(oracle::inst_p3_ab(), 0).has_value());
    auto s = solve_fpt(oracle::inst_p3_ab(), 1);
    REQUIRE(s.has_value());
    CHECK(s->deleted.size() == 1);
    CHECK(solve_fpt(cluster_input(), 0).has_value());
}

TEST_CASE("solve_fpt matches the brute-force optimum with bounded search shape") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Family fam = seed % 3 == 0  ? Family::random_partition
                     : seed % 3 == 1 ? Family::bihedge
                                     : Family::acyclic;
        HedgeGraph h = gen(fam, seed);
        if (h.hedge_count() > 12) continue;
        int opt = static_cast<int>(solve_bruteforce(h).deleted.size());
        CHECK(opt == oracle::opt(h));

        FptStats st;
        auto s = solve_fpt(h, opt, &st);
        REQUIRE(s.has_value());
        CHECK(static_cast<int>(s->deleted.size()) <= opt);
        CHECK(oracle::valid(h, s->deleted));
        CHECK(st.max_depth <= opt);
        CHECK(st.max_children <= 2);
        if (opt > 0) CHECK_FALSE(solve_fpt(h, opt - 1).has_value());
    }
}

TEST_CASE("solve_delta_bounded examples") {
    HedgeGraph star = HedgeGraph::build(4, {{0, 1, "A"}, {0, 2, "B"}, {0, 3, "C"}});
    Solution s = solve_delta_bounded(star);
    CHECK(s.deleted.size() == 2);
    CHECK(oracle::opt(star) == 2);

    CHECK(solve_delta_bounded(oracle::inst_k3_abc()).deleted.empty());

    // K_{2,3}, every edge its own hedge
    HedgeGraph k23 = HedgeGraph::build(5, {{0, 2, "a"},
                                           {0, 3, "b"},
                                           {0, 4, "c"},
                                           {1, 2, "d"},
                                           {1, 3, "e"},
                                           {1, 4, "f"}});
    CHECK(solve_delta_bounded(k23).deleted.size() == oracle::opt(k23));

    CHECK_THROWS_AS(solve_delta_bounded(oracle::chained_triangles(), 2), StructuralError);
}

TEST_CASE("solve_delta_bounded equals the optimum on small random instances") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 200 && tested < 40; ++seed) {
        HedgeGraph h = gen(Family::random_partition, seed, 6, 4);
        if (structural_stats(h, 3).delta_exceeds_cap) continue;
        ++tested;
        CHECK(static_cast<int>(solve_delta_bounded(h).deleted.size()) == oracle::opt(h));
    }
    CHECK(tested >= 20);
}

TEST_CASE("solve_approx2_bihedge examples") {
    HedgeGraph chain = oracle::chained_triangles();
    Solution s = solve_approx2_bihedge(chain);
    CHECK(oracle::valid(chain, s.deleted));
    CHECK(s.deleted.size() <= 6); // optimum is 3

    CHECK(solve_approx2_bihedge(cluster_input()).deleted.empty());
    CHECK_THROWS_AS(solve_approx2_bihedge(oracle::inst_k3_abc()), StructuralError);
}

TEST_CASE("solve_approx2_bihedge can be suboptimal yet stays within factor two") {
    // cover graph (0,1),(0,3),(1,3),(2,3): greedy matching plus
    // minimalization keeps three hedges where two suffice
    std::vector<LabeledEdge> edges;
    int base = 0;
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"t0", "t1"}, {"t2", "t3"}, {"t0", "t3"}, {"t1", "t3"}}) {
        edges.push_back({base, base + 1, a});
        edges.push_back({base + 1, base + 2, b});
        base += 3;
    }
    HedgeGraph h = HedgeGraph::build(base, edges);
    Solution s = solve_approx2_bihedge(h);
    CHECK(oracle::valid(h, s.deleted));
    CHECK(oracle::opt(h) == 2);
    CHECK(s.deleted.size() == 3);
    CHECK(static_cast<int>(s.deleted.size()) <= 2 * oracle::opt(h));
}

TEST_CASE("solve_approx2_bihedge stays within factor two") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        HedgeGraph h = gen(Family::bihedge, seed, 14, 7);
        if (h.hedge_count() > 14) continue;
        Solution s = solve_approx2_bihedge(h);
        CHECK(oracle::valid(h, s.deleted));
        CHECK(static_cast<int>(s.deleted.size()) <= 2 * oracle::opt(h));
    }
}

TEST_CASE("solve_acyclic examples") {
    CHECK(solve_acyclic(oracle::chained_triangles()).deleted.size() == 3);
    CHECK(solve_acyclic(cluster_input()).deleted.empty());
    CHECK_THROWS_AS(solve_acyclic(oracle::inst_k3_abc()), StructuralError);

    // clique-plus-matching instances
    CHECK(solve_acyclic(clique_matching(3, {})).deleted.empty());
    HedgeGraph dented = clique_matching(3, {{0, 2}, {1, 4}});
    CHECK(static_cast<int>(solve_acyclic(dented).deleted.size()) == oracle::opt(dented));
}

TEST_CASE("solve_acyclic equals the optimum on the acyclic family") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        HedgeGraph h = gen(Family::acyclic, seed);
        if (h.hedge_count() > 12) continue;
        Solution s = solve_acyclic(h);
        CHECK(oracle::valid(h, s.deleted));
        CHECK(static_cast<int>(s.deleted.size()) == oracle::opt(h));
    }
}

TEST_CASE("minimal covers of F2 correspond to minimal solutions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        HedgeGraph h = gen(Family::acyclic, seed);
        if (h.hedge_count() > 10) continue;
        AcyclicDecomposition dec = acyclic_decomposition(h);
        const int l = static_cast<int>(dec.f2_hedges.size());
        auto adj = dec.f2.adjacency();

        // every minimal vertex cover of F2, plus the forced set, solves h
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            std::vector<int> s;
            for (int v = 0; v < l; ++v)
                if ((mask >> v) & 1u) s.push_back(v);
            if (!dec.f2.is_cover(s)) continue;
            bool minimal = true;
            for (int v : s) {
                bool needed = false;
                for (int w : adj[v]) needed |= !((mask >> w) & 1u);
                minimal &= needed;
            }
            if (!minimal) continue;
            std::vector<HedgeId> u = dec.forced;
            for (int v : s) u.push_back(dec.f2_hedges[v]);
            std::sort(u.begin(), u.end());
            CHECK(oracle::valid(h, u));
        }

        // every minimal valid solution restricted to F2's vertices covers F2
        auto all = oracle::valid_subsets(h);
        for (const auto& u : all) {
            bool minimal = true;
            for (const auto& other : all) {
                if (other.size() >= u.size()) continue;
                if (std::includes(u.begin(), u.end(), other.begin(), other.end())) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
            std::vector<int> restricted;
            for (int v = 0; v < l; ++v)
                if (std::binary_search(u.begin(), u.end(), dec.f2_hedges[v]))
                    restricted.push_back(v);
            CHECK(dec.f2.is_cover(restricted));
        }
    }
}

TEST_CASE("all solvers produce validated solutions on their domains") {
    for (std::uint64_t seed = 500; seed < 540; ++seed) {
        HedgeGraph h = gen(Family::random_partition, seed, 8, 6);
        if (h.hedge_count() > 12) continue;
        Solution b = solve_bruteforce(h);
        CHECK(validate_solution(h, b.deleted).valid);
        auto f = solve_fpt(h, static_cast<int>(b.deleted.size()));
        REQUIRE(f.has_value());
        CHECK(validate_solution(h, f->deleted).valid);
    }
}
