#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcd/errors.hpp"
#include "hcd/hedge_graph.hpp"
#include "hcd/reductions.hpp"
#include "oracles.hpp"

using namespace hcd;

TEST_CASE("build assigns dense hedge ids in first-appearance order") {
    HedgeGraph h = oracle::inst_p3_ab();
    CHECK(h.hedge_count() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.hedge_token(0) == "A");
    CHECK(h.hedge_token(1) == "B");

    HedgeGraph aa = oracle::inst_p3_aa();
    CHECK(aa.hedge_count() == 1);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(HedgeGraph::build(3, {{0, 1, "A"}, {0, 1, "B"}}), InputError);
    CHECK_THROWS_AS(HedgeGraph::build(3, {{1, 1, "A"}}), InputError);
    CHECK_THROWS_AS(HedgeGraph::build(2, {{0, 2, "A"}}), InputError);
    CHECK_THROWS_AS(HedgeGraph::build(2, {{0, 1, "a b"}}), InputError);
}

TEST_CASE("remove_hedges keeps surviving ids and tokens") {
    HedgeGraph h = oracle::inst_p3_ab();
    HedgeGraph r = h.remove_hedges({*h.hedge_by_token("A")});
    CHECK(r.vertex_count() == 3);
    CHECK(r.edge_count() == 1);
    CHECK(r.edges()[0] == std::make_pair(1, 2));
    CHECK(r.hedges() == std::vector<HedgeId>{*h.hedge_by_token("B")});
    CHECK(r.hedge_token(r.hedges()[0]) == "B");

    HedgeGraph same = h.remove_hedges({});
    CHECK(same.edge_count() == 2);
    CHECK(same.fingerprint() == h.fingerprint());

    HedgeGraph aa = oracle::inst_p3_aa();
    CHECK(aa.remove_hedges({0}).edge_count() == 0);

    CHECK_THROWS_AS(h.remove_hedges({5}), InputError);
}

TEST_CASE("validate_solution examples") {
    HedgeGraph h = oracle::inst_p3_ab();
    CHECK(validate_solution(h, {0}).valid);
    Verdict v = validate_solution(h, {});
    CHECK_FALSE(v.valid);
    CHECK(*v.witness == std::array<Vertex, 3>{0, 1, 2});

    // {v2, v3, v4} is a vertex cover of the base graph, so the matching
    // hedges solve the reduced instance
    auto red = vc_to_hcd(oracle::cover_example_graph());
    CHECK(oracle::min_vc_size(oracle::cover_example_graph()) == 3);
    CHECK(validate_solution(red.graph, oracle::by_tokens(red.graph, {"v2", "v3", "v4"})).valid);
}

TEST_CASE("enumerate_triples examples") {
    TripleCatalog aa = enumerate_triples(oracle::inst_p3_aa());
    REQUIRE(aa.p3s.size() == 1);
    CHECK(aa.p3s[0].kind == P3Kind::internal);
    CHECK(aa.k3s.empty());

    TripleCatalog aab = enumerate_triples(oracle::inst_k3_aab());
    CHECK(aab.p3s.empty());
    REQUIRE(aab.k3s.size() == 1);
    CHECK(aab.k3s[0].hedge_count == 2);
    CHECK(*aab.k3s[0].doubled == 0); // hedge A covers two edges

    HedgeGraph chain = oracle::chained_triangles();
    TripleCatalog cat = enumerate_triples(chain);
    CHECK(cat.p3s.size() == 2);
    for (const auto& t : cat.p3s) CHECK(t.kind == P3Kind::simple);
    CHECK(cat.k3s.size() == 5);
    for (const auto& t : cat.k3s) CHECK(t.hedge_count == 2);
}

TEST_CASE("normalize drops small components and keeps solution sets") {
    // lone K2 plus isolated vertex: no triple survives
    HedgeGraph k2 = HedgeGraph::build(3, {{0, 1, "A"}});
    HedgeGraph n2 = normalize(k2);
    CHECK(n2.vertex_count() == 0);
    CHECK(n2.hedge_count() == 0);

    HedgeGraph abc = oracle::inst_k3_abc();
    HedgeGraph nabc = normalize(abc);
    CHECK(nabc.vertex_count() == 3);
    CHECK(nabc.edge_count() == 3);
    CHECK(nabc.hedge_count() == 3);

    // an edge sitting in two triangles is copied into both components
    HedgeGraph two = HedgeGraph::build(4, {{0, 1, "A"},
                                           {0, 2, "B"},
                                           {1, 2, "C"},
                                           {0, 3, "D"},
                                           {1, 3, "E"}});
    HedgeGraph ntwo = normalize(two);
    int copies = 0;
    for (std::size_t i = 0; i < ntwo.edges().size(); ++i)
        copies += ntwo.hedge_token(ntwo.edge_hedge()[i]) == "A";
    CHECK(copies == 2);

    // solution families over surviving hedges coincide
    for (const HedgeGraph* g : {&two, &abc}) {
        HedgeGraph n = normalize(*g);
        std::set<std::vector<std::string>> a, b;
        for (const auto& u : oracle::valid_subsets(*g)) {
            std::vector<std::string> toks;
            for (HedgeId x : u)
                if (n.hedge_by_token(g->hedge_token(x))) toks.push_back(g->hedge_token(x));
            std::sort(toks.begin(), toks.end());
            a.insert(toks);
        }
        for (const auto& u : oracle::valid_subsets(n)) b.insert(oracle::tokens_of(n, u));
        CHECK(a == b);
    }
}

TEST_CASE("forced_closure examples") {
    CHECK(forced_closure(oracle::inst_p3_aa()) == std::vector<HedgeId>{0});
    CHECK(forced_closure(oracle::inst_k3_aab()).empty());

    // deleting B (forced by its own internal P3) exposes the internal P3 of A
    HedgeGraph chain = HedgeGraph::build(6, {{0, 1, "A"},
                                             {0, 2, "A"},
                                             {1, 2, "B"},
                                             {3, 4, "B"},
                                             {4, 5, "B"}});
    std::vector<HedgeId> closure = forced_closure(chain);
    CHECK(closure == oracle::by_tokens(chain, {"A", "B"}));
    for (const auto& u : oracle::valid_subsets(chain)) {
        std::set<HedgeId> uset(u.begin(), u.end());
        for (HedgeId x : closure) CHECK(uset.count(x));
    }
}

TEST_CASE("structural_stats examples") {
    StructuralStats k3 = structural_stats(oracle::inst_k3_abc(), 3);
    CHECK_FALSE(k3.bi_hedge);
    CHECK(k3.three_hedge_triangle.has_value());
    CHECK(k3.delta_max == 1);

    StructuralStats chain = structural_stats(oracle::chained_triangles(), 2);
    CHECK(chain.bi_hedge);
    CHECK(chain.delta_exceeds_cap);

    HedgeGraph star = HedgeGraph::build(4, {{0, 1, "A"}, {0, 2, "B"}, {0, 3, "C"}});
    StructuralStats s = structural_stats(star, 3);
    CHECK(s.delta_max == 1);
    CHECK(s.packing.size() == 1);
}

namespace {

HedgeGraph random_instance(std::mt19937_64& rng, int n, int hedges, double p) {
    std::vector<LabeledEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) * 0x1.0p-53 < p)
                edges.push_back({u, v, "h" + std::to_string(rng() % hedges)});
    return HedgeGraph::build(n, edges);
}

} // namespace

TEST_CASE("partition invariant and catalog against the naive scan") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; ++it) {
        HedgeGraph h = random_instance(rng, 8, 5, 0.4);
        for (HedgeId x : h.hedges()) CHECK(!h.hedge_edges(x).empty());

        // catalog must equal the full cubic scan, triple for triple
        TripleCatalog cat = enumerate_triples(h);
        std::set<std::array<Vertex, 3>> p3_want, k3_want;
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b)
                for (int c = b + 1; c < 8; ++c) {
                    int deg = h.has_edge(a, b) + h.has_edge(a, c) + h.has_edge(b, c);
                    if (deg == 2) p3_want.insert({a, b, c});
                    if (deg == 3) k3_want.insert({a, b, c});
                }
        std::set<std::array<Vertex, 3>> p3_got, k3_got;
        for (const auto& t : cat.p3s) {
            std::array<Vertex, 3> v{t.a, t.b, t.c};
            std::sort(v.begin(), v.end());
            p3_got.insert(v);
            CHECK(h.hedge_of(t.a, t.b) == t.left);
            CHECK(h.hedge_of(t.b, t.c) == t.right);
            CHECK_FALSE(h.has_edge(t.a, t.c));
            CHECK((t.kind == P3Kind::internal) == (t.left == t.right));
        }
        for (const auto& t : cat.k3s) {
            k3_got.insert({t.a, t.b, t.c});
            CHECK(h.hedge_of(t.a, t.b) == t.ab);
            CHECK(h.hedge_of(t.a, t.c) == t.ac);
            CHECK(h.hedge_of(t.b, t.c) == t.bc);
            std::set<HedgeId> hs{t.ab, t.ac, t.bc};
            CHECK(static_cast<int>(hs.size()) == t.hedge_count);
        }
        CHECK(p3_got == p3_want);
        CHECK(k3_got == k3_want);
    }
}

TEST_CASE("validate_solution agrees with the exhaustive rescan") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 40; ++it) {
        HedgeGraph h = random_instance(rng, 7, 4, 0.45);
        const auto& hs = h.hedges();
        for (unsigned mask = 0; mask < (1u << hs.size()); ++mask) {
            std::vector<HedgeId> u;
            for (std::size_t i = 0; i < hs.size(); ++i)
                if ((mask >> i) & 1u) u.push_back(hs[i]);
            Verdict v = validate_solution(h, u);
            auto expect = oracle::least_p3(h, u);
            CHECK(v.valid == !expect.has_value());
            if (expect) CHECK(*v.witness == *expect);
        }
    }
}

TEST_CASE("forced_closure is contained in every valid solution") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 30; ++it) {
        HedgeGraph h = random_instance(rng, 7, 5, 0.4);
        std::vector<HedgeId> closure = forced_closure(h);
        for (const auto& u : oracle::valid_subsets(h)) {
            std::set<HedgeId> uset(u.begin(), u.end());
            for (HedgeId x : closure) CHECK(uset.count(x));
        }
    }
}

TEST_CASE("normalize preserves solution families on random instances") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 20; ++it) {
        HedgeGraph h = random_instance(rng, 6, 4, 0.5);
        HedgeGraph n = normalize(h);
        if (n.hedge_count() > 14) continue;
        std::set<std::vector<std::string>> a, b;
        for (const auto& u : oracle::valid_subsets(h)) {
            std::vector<std::string> toks;
            for (HedgeId x : u)
                if (n.hedge_by_token(h.hedge_token(x))) toks.push_back(h.hedge_token(x));
            std::sort(toks.begin(), toks.end());
            a.insert(toks);
        }
        for (const auto& u : oracle::valid_subsets(n)) b.insert(oracle::tokens_of(n, u));
        CHECK(a == b);
    }
}
