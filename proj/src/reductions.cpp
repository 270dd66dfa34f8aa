#include "hcd/reductions.hpp"

#include <algorithm>
#include <set>

#include "hcd/errors.hpp"

namespace hcd {

VcToHcd vc_to_hcd(const SimpleGraph& g) {
    VcToHcd out;
    std::vector<LabeledEdge> edges;
    auto token = [](int v) { return "v" + std::to_string(v + 1); };
    int base = 0;
    for (auto [x, y] : g.edges) {
        // e_x = base, e_xy = base + 1, e_y = base + 2
        edges.push_back({base, base + 1, token(x)});
        edges.push_back({base + 1, base + 2, token(y)});
        base += 3;
    }
    out.graph = HedgeGraph::build(base, edges);
    std::vector<char> covered(g.n, 0);
    for (auto [x, y] : g.edges) covered[x] = covered[y] = 1;
    for (int v = 0; v < g.n; ++v) {
        if (covered[v])
            out.vertex_to_hedge.emplace_back(v, *out.graph.hedge_by_token(token(v)));
        else
            out.dropped_isolated.push_back(v);
    }
    return out;
}

namespace {

// Canonical (endpoint, center, endpoint) form of a three-vertex path
// component, endpoints sorted.
struct CorePath {
    Vertex a, b, c;
    std::string left, right; // hedge tokens of {a,b} and {b,c}
};

std::vector<CorePath> core_paths(const HedgeGraph& core) {
    std::vector<CorePath> paths;
    for (const auto& comp : core.components()) {
        if (comp.size() == 1 && core.neighbors(comp[0]).empty())
            throw InputError("core is not a disjoint union of P3's: isolated vertex " +
                             std::to_string(comp[0]));
        if (comp.size() != 3)
            throw InputError("core is not a disjoint union of P3's");
        Vertex center = -1;
        for (Vertex v : comp)
            if (core.neighbors(v).size() == 2) center = v;
        std::vector<Vertex> ends;
        for (Vertex v : comp)
            if (v != center) ends.push_back(v);
        if (center < 0 || core.has_edge(ends[0], ends[1]))
            throw InputError("core is not a disjoint union of P3's");
        CorePath p;
        p.a = ends[0];
        p.b = center;
        p.c = ends[1];
        p.left = core.hedge_token(*core.hedge_of(p.a, p.b));
        p.right = core.hedge_token(*core.hedge_of(p.b, p.c));
        paths.push_back(p);
    }
    std::sort(paths.begin(), paths.end(), [](const CorePath& x, const CorePath& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return paths;
}

} // namespace

HedgeGraph embed_host(const HedgeGraph& core, HostKind host, int host_size) {
    std::vector<CorePath> paths = core_paths(core);
    const int dprime = static_cast<int>(paths.size());
    if (host_size % 3 != 0)
        throw InputError("host size must be divisible by 3");
    // part 0 holds the forced P3; one part per core component after it
    if (host_size < 3 * (dprime + 1))
        throw InputError("host too small: need at least " +
                         std::to_string(3 * (dprime + 1)) + " vertices for " +
                         std::to_string(dprime) + " core components");

    std::set<std::pair<Vertex, Vertex>> host_edges;
    if (host == HostKind::path) {
        for (int i = 0; i + 1 < host_size; ++i) host_edges.insert({i, i + 1});
    } else {
        // complete graph minus {0,1}; K_n itself is a cluster graph
        for (int i = 0; i < host_size; ++i)
            for (int j = i + 1; j < host_size; ++j)
                if (!(i == 0 && j == 1)) host_edges.insert({i, j});
    }

    std::string filler = "host";
    {
        std::set<std::string> used;
        for (const auto& p : paths) {
            used.insert(p.left);
            used.insert(p.right);
        }
        while (used.count(filler)) filler += "_";
    }

    // parts 1..dprime carry the core components, in lexicographic order
    std::map<std::pair<Vertex, Vertex>, std::string> label;
    for (int j = 1; j <= dprime; ++j) {
        const CorePath& p = paths[j - 1];
        Vertex a = 3 * j;
        label[{a, a + 1}] = p.left;
        label[{a + 1, a + 2}] = p.right;
    }
    std::vector<LabeledEdge> edges;
    for (auto [u, v] : host_edges) {
        auto it = label.find({u, v});
        edges.push_back({u, v, it == label.end() ? filler : it->second});
    }
    return HedgeGraph::build(host_size, edges);
}

FormulaToHcd minones_to_hcd(const ConstraintFormula& phi) {
    validate_formula(phi);
    FormulaToHcd out;
    std::vector<LabeledEdge> edges;
    int base = 0;
    for (const auto& c : phi.clauses) {
        if (c.kind == ClauseKind::f1) {
            std::vector<std::string> tok;
            for (const auto& t : c.args) {
                if (t.is_const())
                    throw InputError("minones_to_hcd handles constant-free f1 only");
                tok.push_back(phi.variables[t.var]);
            }
            edges.push_back({base, base + 1, tok[0]});
            edges.push_back({base, base + 2, tok[1]});
            edges.push_back({base + 1, base + 2, tok[2]});
            base += 3;
        } else if (c.kind == ClauseKind::f2) {
            const std::string& tok = phi.variables[c.args[0].var];
            edges.push_back({base, base + 1, tok});
            edges.push_back({base + 1, base + 2, tok});
            base += 3;
        } else {
            throw InputError(std::string("minones_to_hcd accepts f1/f2 clauses, got ") +
                             clause_name(c.kind));
        }
    }
    out.graph = HedgeGraph::build(base, edges);
    for (const auto& v : phi.variables)
        if (out.graph.hedge_by_token(v)) out.var_to_hedge.emplace_back(v, v);
    return out;
}

FormulaToHcd propsat_to_hcd(const ConstraintFormula& phi) {
    validate_formula(phi);
    FormulaToHcd out;
    std::vector<LabeledEdge> edges;
    int base = 0;
    auto triangle = [&](const std::string& ab, const std::string& ac, const std::string& bc) {
        edges.push_back({base, base + 1, ab});
        edges.push_back({base, base + 2, ac});
        edges.push_back({base + 1, base + 2, bc});
        base += 3;
    };
    auto path = [&](const std::string& left, const std::string& right) {
        edges.push_back({base, base + 1, left});
        edges.push_back({base + 1, base + 2, right});
        base += 3;
    };
    for (const auto& c : phi.clauses) {
        if (c.kind != ClauseKind::f1)
            throw InputError(std::string("propsat_to_hcd accepts f1 clauses only, got ") +
                             clause_name(c.kind));
        int zeros = 0, ones = 0;
        std::vector<std::string> vars;
        for (const auto& t : c.args) {
            if (t.is_const())
                (t.constant ? ones : zeros)++;
            else
                vars.push_back(phi.variables[t.var]);
        }
        if (vars.empty())
            throw InputError("all-constant f1 clause; apply eliminate_constants first");
        if (zeros == 2)
            throw InputError("f1(0,0,x) clause present; apply eliminate_constants first");
        if (zeros == 1 && ones == 1) {
            path(vars[0], vars[0]); // internal P3 forces the hedge out
        } else if (ones == 2) {
            triangle(vars[0], vars[0], vars[0]); // one-hedge triangle, always a cluster
        } else if (zeros == 1) {
            // deleting one hedge of a doubled pair drags the other along
            triangle(vars[0], vars[0], vars[1]);
            triangle(vars[1], vars[1], vars[0]);
        } else if (ones == 1) {
            path(vars[0], vars[1]); // simple P3: at least one side must go
        } else {
            triangle(vars[0], vars[1], vars[2]);
        }
    }
    out.graph = HedgeGraph::build(base, edges);
    for (const auto& v : phi.variables)
        if (out.graph.hedge_by_token(v)) out.var_to_hedge.emplace_back(v, v);
    return out;
}

namespace {

void require_plain_tokens(const HedgeGraph& h) {
    for (HedgeId x : h.hedges())
        if (h.hedge_token(x) == "0" || h.hedge_token(x) == "1")
            throw InputError("hedge token '" + h.hedge_token(x) +
                             "' collides with a formula constant");
}

// Hedge ids of a triangle sorted ascending and deduplicated.
std::vector<HedgeId> k3_hedges(const K3Entry& t) {
    std::vector<HedgeId> hs{t.ab, t.ac, t.bc};
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

} // namespace

HcdToFormula hcd_to_minones(const HedgeGraph& h) {
    require_plain_tokens(h);
    TripleCatalog cat = enumerate_triples(h);
    HcdToFormula out;
    auto tok = [&](HedgeId x) { return h.hedge_token(x); };
    for (const auto& t : cat.k3s) {
        auto hs = k3_hedges(t);
        if (t.hedge_count == 3)
            out.formula.add_clause(ClauseKind::f1, {tok(hs[0]), tok(hs[1]), tok(hs[2])});
        else if (t.hedge_count == 2) {
            HedgeId single = hs[0] == *t.doubled ? hs[1] : hs[0];
            out.formula.add_clause(ClauseKind::g1, {tok(single), tok(*t.doubled)});
        }
        // a one-hedge triangle stays a cluster whether kept or deleted
    }
    for (const auto& t : cat.p3s) {
        if (t.kind == P3Kind::internal)
            out.formula.add_clause(ClauseKind::f2, {tok(t.left)});
        else {
            HedgeId lo = std::min(t.left, t.right), hi = std::max(t.left, t.right);
            out.formula.add_clause(ClauseKind::g2, {tok(lo), tok(hi)});
        }
    }
    for (const auto& v : out.formula.variables) out.hedge_to_var.emplace_back(v, v);
    return out;
}

HcdToFormula hcd_to_propsat(const HedgeGraph& h) {
    require_plain_tokens(h);
    TripleCatalog cat = enumerate_triples(h);
    HcdToFormula out;
    auto tok = [&](HedgeId x) { return h.hedge_token(x); };
    for (const auto& t : cat.k3s) {
        auto hs = k3_hedges(t);
        if (t.hedge_count == 3) {
            out.formula.add_clause(ClauseKind::fp, {tok(hs[0]), tok(hs[1]), tok(hs[2])});
            out.formula.add_clause(ClauseKind::fp, {tok(hs[1]), tok(hs[0]), tok(hs[2])});
            out.formula.add_clause(ClauseKind::fp, {tok(hs[2]), tok(hs[0]), tok(hs[1])});
        } else if (t.hedge_count == 2) {
            HedgeId single = hs[0] == *t.doubled ? hs[1] : hs[0];
            out.formula.add_clause(ClauseKind::fp, {tok(single), tok(*t.doubled), "0"});
        }
    }
    for (const auto& t : cat.p3s) {
        if (t.kind == P3Kind::internal)
            out.formula.add_clause(ClauseKind::fp, {"1", "0", tok(t.left)});
        else {
            HedgeId lo = std::min(t.left, t.right), hi = std::max(t.left, t.right);
            out.formula.add_clause(ClauseKind::fp, {"1", tok(lo), tok(hi)});
        }
    }
    for (const auto& v : out.formula.variables) out.hedge_to_var.emplace_back(v, v);
    return out;
}

ConstantElimination eliminate_constants(const ConstraintFormula& phi) {
    validate_formula(phi);
    for (const auto& c : phi.clauses)
        if (c.kind != ClauseKind::f1)
            throw InputError(std::string("eliminate_constants accepts f1 clauses only, got ") +
                             clause_name(c.kind));

    ConstantElimination out;
    std::vector<Clause> clauses = phi.clauses;
    for (;;) {
        // Drop satisfied all-constant clauses; an unsatisfied one means the
        // formula cannot be satisfied at all.
        std::vector<Clause> kept;
        for (const auto& c : clauses) {
            bool all_const = true;
            int ones = 0;
            for (const auto& t : c.args) {
                if (t.is_const())
                    ones += t.constant ? 1 : 0;
                else
                    all_const = false;
            }
            if (!all_const) {
                kept.push_back(c);
            } else if (ones == 1) {
                out.infeasible = true;
                return out;
            }
        }
        clauses = std::move(kept);

        int victim = -1;
        for (const auto& c : clauses) {
            int zeros = 0, var = -1, nvars = 0;
            for (const auto& t : c.args) {
                if (t.is_const())
                    zeros += t.constant ? 0 : 1;
                else {
                    var = t.var;
                    ++nvars;
                }
            }
            if (zeros == 2 && nvars == 1) {
                victim = var;
                break;
            }
        }
        if (victim < 0) break;
        out.eliminated.push_back(phi.variables[victim]);
        for (auto& c : clauses)
            for (auto& t : c.args)
                if (!t.is_const() && t.var == victim) t = Term::of_const(false);
    }

    // reindex to the variables that still occur
    std::vector<int> remap(phi.variables.size(), -1);
    for (const auto& c : clauses)
        for (const auto& t : c.args)
            if (!t.is_const() && remap[t.var] < 0) {
                remap[t.var] = static_cast<int>(out.formula.variables.size());
                out.formula.variables.push_back(phi.variables[t.var]);
            }
    for (auto c : clauses) {
        for (auto& t : c.args)
            if (!t.is_const()) t = Term::variable(remap[t.var]);
        out.formula.clauses.push_back(std::move(c));
    }
    return out;
}

} // namespace hcd
