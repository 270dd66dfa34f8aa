#pragma once

#include <string>
#include <vector>

#include "hcd/cover.hpp"
#include "hcd/formula.hpp"
#include "hcd/hedge_graph.hpp"

namespace hcd {

/// Vertex Cover -> Hedge Cluster Deletion. Each edge {x,y} of g becomes a
/// vertex-disjoint path e_x - e_xy - e_y whose two edges lie in the hedges
/// of x and y; covers of size k correspond to solutions of size k. Isolated
/// vertices take part in no edge and are dropped (reported back).
struct VcToHcd {
    HedgeGraph graph;
    std::vector<std::pair<int, HedgeId>> vertex_to_hedge; // covered vertices only
    std::vector<int> dropped_isolated;
};

VcToHcd vc_to_hcd(const SimpleGraph& g);

enum class HostKind { path, clique };

/// Embeds a dP3-shaped core into a host with a trivial perfect F3-packing.
/// `path` is the path on host_size vertices; `clique` is the complete graph
/// minus the edge {0,1} (the complete graph itself is already a cluster
/// graph, so one edge is removed to expose a P3). Two edges of each
/// consecutive-triple packing part outside the chosen P3 carry one core
/// component's hedges; everything unmapped goes into one fresh hedge, which
/// is forced by the internal P3 at the chosen triple. (core, k) is a
/// yes-instance exactly when (output, k+1) is.
HedgeGraph embed_host(const HedgeGraph& core, HostKind host, int host_size);

struct FormulaToHcd {
    HedgeGraph graph;
    std::vector<std::pair<std::string, std::string>> var_to_hedge; // token pairs
};

/// MinOnes({f1 without constants, f2}) -> HCD: one three-hedge triangle per
/// f1, one internal P3 per f2, all components vertex-disjoint.
FormulaToHcd minones_to_hcd(const ConstraintFormula& phi);

/// Propagational-f1 formulas (constants allowed, no f1(0,0,x) left) -> HCD,
/// one or two three-vertex components per clause.
FormulaToHcd propsat_to_hcd(const ConstraintFormula& phi);

struct HcdToFormula {
    ConstraintFormula formula;
    std::vector<std::pair<std::string, std::string>> hedge_to_var; // token pairs
};

/// HCD -> MinOnes({f1,g1,g2,f2}) over normalize(h): f1 per three-hedge
/// triangle, g1(single, doubled) per two-hedge triangle, g2 per simple P3,
/// f2 per internal P3; one-hedge triangles constrain nothing.
HcdToFormula hcd_to_minones(const HedgeGraph& h);

/// HCD -> Propagational-f' over normalize(h), every clause fp(x,y,z) =
/// !x | y | z with constants allowed.
HcdToFormula hcd_to_propsat(const HedgeGraph& h);

/// Constant elimination for f1 formulas: every f1(0,0,x) forces x = 0;
/// substitution repeats until no such clause remains. Deriving f1(0,0,1)
/// makes the formula infeasible, which is a result rather than an error.
struct ConstantElimination {
    bool infeasible = false;
    ConstraintFormula formula;              // meaningful when !infeasible
    std::vector<std::string> eliminated;    // variables forced to 0
};

ConstantElimination eliminate_constants(const ConstraintFormula& phi);

} // namespace hcd
