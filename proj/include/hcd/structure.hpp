#pragma once

#include <optional>
#include <vector>

#include "hcd/hedge_graph.hpp"

namespace hcd {

/// Per-hedge forced-deletion propagation on bi-hedge graphs.
///
/// sk3(x) holds the triangles with exactly one edge in hedge x; on a
/// bi-hedge graph the other two edges of such a triangle share a single
/// hedge, recorded in d(x). Deleting x turns each sk3(x) triangle into an
/// internal P3 of its doubled hedge, so deletion propagates along d; r(x)
/// is every hedge with a directed d-path to x, plus x itself.
struct DominationIndex {
    std::vector<HedgeId> hedges; // live ids of the source graph, sorted

    const std::vector<K3Entry>& sk3(HedgeId x) const;
    const std::vector<HedgeId>& d(HedgeId x) const;
    const std::vector<HedgeId>& r(HedgeId x) const;

    std::vector<std::vector<K3Entry>> sk3_;
    std::vector<std::vector<HedgeId>> d_;
    std::vector<std::vector<HedgeId>> r_;
    std::vector<int> slot_; // hedge id -> index, -1 when unknown

    int slot(HedgeId x) const;
};

/// Requires every triangle of h to be covered by at most two hedges;
/// otherwise throws StructuralError naming a violating triangle.
DominationIndex build_domination(const HedgeGraph& h);

enum class IntersectionType {
    p3_only,   // the pair spans at least one P3 and no triangle
    k3_only,   // the pair spans at least one triangle and no P3
    p3_and_k3, // both
};

/// Graph on the hedges: two hedges are adjacent exactly when some edge of
/// one shares an endpoint with some edge of the other. Every adjacency is
/// witnessed by a catalogued triple, which makes the edge typing total.
struct HedgeIntersectionGraph {
    struct Edge {
        HedgeId x = 0, y = 0; // x < y
        IntersectionType type = IntersectionType::p3_only;
    };
    std::vector<HedgeId> vertices; // sorted live hedge ids
    std::vector<Edge> edges;       // sorted by (x, y)

    std::optional<IntersectionType> type_of(HedgeId x, HedgeId y) const;
};

HedgeIntersectionGraph build_intersection_graph(const HedgeGraph& h);

/// Hedges x incident to a both-type edge {x,y} with x in d(y), i.e. hedges
/// supplying two edges of a triangle whose partner also spans a P3 with
/// them. Every mixed vertex belongs to every solution.
std::vector<HedgeId> mixed_vertices(const HedgeIntersectionGraph& f,
                                    const DominationIndex& dom);

bool is_acyclic(const HedgeIntersectionGraph& f);

/// A cycle (as a hedge id sequence) when f has one.
std::optional<std::vector<HedgeId>> find_cycle(const HedgeIntersectionGraph& f);

} // namespace hcd
