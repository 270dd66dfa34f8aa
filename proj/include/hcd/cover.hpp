#pragma once

#include <vector>

namespace hcd {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // sorted, u < v

    /// Validates (no loops, no duplicates, endpoints in range) and sorts.
    static SimpleGraph build(int n, std::vector<std::pair<int, int>> edges);

    std::vector<std::vector<int>> adjacency() const;
    bool is_cover(const std::vector<int>& s) const;
};

/// Both endpoints of a greedy maximal matching built in lexicographic edge
/// order; at most twice a minimum cover.
std::vector<int> vc_2approx(const SimpleGraph& g);

/// Minimum vertex cover of a bipartite graph via maximum matching and
/// alternating-path reachability. Throws StructuralError with an odd-cycle
/// witness when g is not bipartite.
std::vector<int> vc_bipartite_exact(const SimpleGraph& g);

/// Testing oracle: subset enumeration in increasing size then lexicographic
/// order. Guarded to n <= 24.
std::vector<int> vc_bruteforce(const SimpleGraph& g);

/// Minimal cover contained in s; unnecessary vertices are dropped from the
/// highest id down, so lower ids are preferred to stay. Throws InputError
/// when s is not a cover.
std::vector<int> minimalize_vc(const SimpleGraph& g, const std::vector<int>& s);

/// Vertex Cover with per-vertex lists: a solution S must cover every edge
/// and satisfy L(S) = S. Construction requires v in L(v) and the
/// monotonicity property (P1): x in L(y) implies L(x) subset of L(y).
struct ListCoverInstance {
    SimpleGraph g;
    std::vector<std::vector<int>> lists; // sorted; lists[v] contains v

    static ListCoverInstance build(SimpleGraph g, std::vector<std::vector<int>> lists);
};

/// Plain-cover reformulation: vertices lying in L(x) and L(y) of some edge
/// {x,y} are forced into every solution; the remaining graph gets all pairs
/// of E(L(x), L(y)) per original edge, restricted to surviving vertices.
/// `gprime` keeps the original id space with forced vertices isolated.
struct MvcReduction {
    SimpleGraph gprime;
    std::vector<int> forced; // sorted
};

MvcReduction mvc_to_vc(const ListCoverInstance& inst);

/// minimalize(vc_2approx(G')) united with the forced set; a valid solution
/// of the list instance within twice the optimum.
std::vector<int> mvc_solve_2approx(const ListCoverInstance& inst);

bool mvc_is_solution(const ListCoverInstance& inst, const std::vector<int>& s);

} // namespace hcd
