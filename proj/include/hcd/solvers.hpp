#pragma once

#include <optional>

#include "hcd/cover.hpp"
#include "hcd/hedge_graph.hpp"
#include "hcd/structure.hpp"

namespace hcd {

/// Smallest hedge set whose removal leaves a cluster graph, found by subset
/// enumeration in increasing size then lexicographic order. Guarded to 24
/// hedges.
Solution solve_bruteforce(const HedgeGraph& h);

struct FptStats {
    long nodes = 0;
    int max_depth = 0;    // branch decisions on the deepest path
    int max_children = 0; // widest branch
};

/// Bounded search tree: delete the forced closure of the residual, then
/// branch on the two hedges of the lexicographically least induced P3.
/// Returns a solution of size at most k when one exists.
std::optional<Solution> solve_fpt(const HedgeGraph& h, int k, FptStats* stats = nullptr);

/// Exact solver for graphs whose largest F3-packing has size at most `cap`:
/// after fixing a maximum packing, the rest of the graph is an induced
/// matching plus isolated vertices, so all cluster subgraphs can be
/// enumerated from partitions of the packed vertices extended by at most
/// two outside vertices per part. Refuses when the packing exceeds the cap.
Solution solve_delta_bounded(const HedgeGraph& h, int cap = 3);

/// Factor-2 approximation on bi-hedge graphs: remove the forced closure,
/// reduce the rest to Multi-Vertex Cover over the domination lists, solve
/// that within factor 2 through the plain-cover expansion.
Solution solve_approx2_bihedge(const HedgeGraph& h);

/// Exact polynomial solver for inputs whose hedge intersection graph is
/// acyclic: forced hedges (internal P3's and mixed vertices) are removed to
/// a fixpoint, the remaining intersection graph is split into components
/// connected by triangle-type edges, each P3-type edge between components
/// is expanded over the domination lists, and a minimum vertex cover of the
/// resulting bipartite graph completes the solution.
Solution solve_acyclic(const HedgeGraph& h);

/// Intermediate state of the acyclic algorithm, exposed so its structural
/// facts (single inter-component edge, domination confined to components,
/// component independence, bipartiteness) can be checked directly.
struct AcyclicDecomposition {
    std::vector<HedgeId> forced; // fixpoint of internal-P3 hedges and mixed vertices
    HedgeGraph residual;
    HedgeIntersectionGraph f1;      // intersection graph of the residual
    std::vector<HedgeId> f2_hedges; // F2 vertex slot -> residual hedge id
    std::vector<int> component;     // per slot: component id in F1 minus P3-type edges
    SimpleGraph f2;
};

AcyclicDecomposition acyclic_decomposition(const HedgeGraph& h);

} // namespace hcd
