#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcd {

using Vertex = int;
using HedgeId = int;

struct LabeledEdge {
    Vertex u = 0;
    Vertex v = 0;
    std::string hedge;
};

/// A simple graph whose edge set is partitioned into named hedges.
///
/// Vertices are dense ids 0..n-1. Hedge ids are assigned densely in order of
/// first appearance of their token at build time; removing hedges keeps the
/// surviving ids and tokens intact, so a residual graph may have gaps in its
/// id space. `hedges()` always lists the ids that still own at least one
/// edge. Instances are immutable after construction.
class HedgeGraph {
public:
    HedgeGraph() = default;

    /// Validates and builds. Rejects self-loops, duplicate pairs,
    /// out-of-range endpoints and whitespace in hedge tokens.
    static HedgeGraph build(int n, const std::vector<LabeledEdge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int hedge_count() const { return static_cast<int>(live_.size()); }

    /// Edge list sorted by (u, v), u < v. `edge_hedge()[i]` is the hedge of
    /// `edges()[i]`.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<HedgeId>& edge_hedge() const { return edge_hedge_; }

    /// Hedge ids that own at least one edge, sorted ascending.
    const std::vector<HedgeId>& hedges() const { return live_; }

    const std::string& hedge_token(HedgeId x) const;
    std::optional<HedgeId> hedge_by_token(const std::string& token) const;

    /// Edge indices belonging to hedge x (into `edges()`).
    const std::vector<int>& hedge_edges(HedgeId x) const;

    bool has_edge(Vertex u, Vertex v) const;
    std::optional<HedgeId> hedge_of(Vertex u, Vertex v) const;

    /// Sorted neighbor list in the underlying graph.
    const std::vector<Vertex>& neighbors(Vertex v) const;

    /// Connected components of the underlying graph, each a sorted vertex
    /// list, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;

    /// Same vertex set with the edges of `u` removed; surviving hedges keep
    /// their ids and tokens. Unknown ids are rejected.
    HedgeGraph remove_hedges(const std::vector<HedgeId>& u) const;

    bool is_live(HedgeId x) const;

    /// Stable structural hash over (n, sorted edges, hedge tokens).
    std::uint64_t fingerprint() const;

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<HedgeId> edge_hedge_;
    std::vector<std::string> hedge_names_;        // full id space
    std::vector<HedgeId> live_;                   // sorted ids with >= 1 edge
    std::vector<std::vector<int>> hedge_edges_;   // per id, edge indices
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<std::pair<Vertex, HedgeId>>> adj_hedge_; // sorted by neighbor

    void finish(); // rebuild derived structures from edges_/edge_hedge_
};

enum class P3Kind { internal, simple };

/// Induced path a-b-c (endpoints non-adjacent), canonicalized with a < c.
struct P3Entry {
    Vertex a = 0, b = 0, c = 0;
    HedgeId left = 0;  // hedge of {a,b}
    HedgeId right = 0; // hedge of {b,c}
    P3Kind kind = P3Kind::simple;
};

/// Triangle a < b < c with its per-edge hedges; `hedge_count` is the number
/// of distinct hedges covering it and `doubled` is set exactly when that
/// number is two.
struct K3Entry {
    Vertex a = 0, b = 0, c = 0;
    HedgeId ab = 0, ac = 0, bc = 0;
    int hedge_count = 0;
    std::optional<HedgeId> doubled;
};

struct TripleCatalog {
    std::vector<P3Entry> p3s; // sorted by (a, b, c)
    std::vector<K3Entry> k3s; // sorted by (a, b, c)
};

/// All induced P3's and all triangles of the underlying graph, with hedge
/// tags, in deterministic lexicographic order.
TripleCatalog enumerate_triples(const HedgeGraph& h);

struct Solution {
    std::vector<HedgeId> deleted; // sorted
    std::uint64_t source_fingerprint = 0;
};

struct Verdict {
    bool valid = false;
    // Lexicographically least induced P3 (a, b, c) of the residual
    // underlying graph when invalid.
    std::optional<std::array<Vertex, 3>> witness;
};

/// Whether H \ u is a cluster hedge-subgraph.
Verdict validate_solution(const HedgeGraph& h, const std::vector<HedgeId>& u);

/// Equivalent instance in which every connected component is a single
/// catalogued triple. Components with fewer than three vertices are dropped,
/// along with hedges left without edges; surviving hedges keep their tokens.
HedgeGraph normalize(const HedgeGraph& h);

/// Least fixpoint of: add every hedge spanning an internal P3 in the
/// residual underlying graph. Every returned hedge belongs to every valid
/// solution (removal of a forced hedge may expose further internal P3's, so
/// a single pass is not enough).
std::vector<HedgeId> forced_closure(const HedgeGraph& h);

struct StructuralStats {
    bool bi_hedge = true;
    // A triangle covered by three hedges, when bi_hedge is false.
    std::optional<std::array<Vertex, 3>> three_hedge_triangle;
    int delta_cap = 0;
    bool delta_exceeds_cap = false;
    int delta_max = 0; // valid only when !delta_exceeds_cap
    // Witnessing maximum F3-packing (vertex-disjoint connected three-vertex
    // subgraphs), lexicographically least.
    std::vector<std::array<Vertex, 3>> packing;
};

/// Bi-hedge flag plus the largest F3-packing size, searched exhaustively but
/// only up to `delta_cap` (the unbounded search is NP-complete).
StructuralStats structural_stats(const HedgeGraph& h, int delta_cap);

} // namespace hcd
