#pragma once

#include <cstdint>

#include "hcd/hedge_graph.hpp"
#include "hcd/reductions.hpp"

namespace hcd {

enum class Family { deltap3, random_partition, bihedge, acyclic, hosted };

/// Seeded instance description. The same (family, seed, parameters) always
/// produces byte-identical output within one build; unset size fields fall
/// back to family defaults.
struct InstanceFamily {
    Family family = Family::random_partition;
    std::uint64_t seed = 0;
    int n = 0;            // vertices (deltap3/random: base graph; bihedge: ~3 per component)
    int hedges = 0;       // hedge token pool size where applicable
    double density = 0.0; // edge probability where applicable
    HostKind host_kind = HostKind::path;
    bool host_kind_set = false;
    int host_size = 0; // 0 = smallest that fits plus a seeded slack
};

/// deltap3: the vertex-cover reduction applied to a seeded random graph.
/// random: seeded graph, each edge thrown into one of `hedges` buckets.
/// bihedge: disjoint three-vertex components over a shared token pool, no
///   triangle covered by more than two hedges by construction.
/// acyclic: either a forest of domination/adjacency relations realized by
///   two-hedge triangles and simple P3's, or a clique-minus-random-edges
///   with a distinctly-hedged perfect matching; the hedge intersection
///   graph is checked acyclic after the fact.
/// hosted: embed_host over a seeded deltap3 core.
HedgeGraph generate(const InstanceFamily& spec);

} // namespace hcd
