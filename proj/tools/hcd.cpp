#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcd/errors.hpp"
#include "hcd/generate.hpp"
#include "hcd/io.hpp"
#include "hcd/reductions.hpp"
#include "hcd/solvers.hpp"
#include "hcd/structure.hpp"

namespace {

// exit codes: 0 ok/valid, 1 invalid or infeasible, 2 input/usage error,
// 3 structural precondition violated

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hcd::InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hcd::InputError("cannot write '" + path + "'");
    out << text;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

// Budget-doubling driver around the bounded search.
hcd::Solution fpt_doubling(const hcd::HedgeGraph& h) {
    const int l = h.hedge_count();
    if (auto s = hcd::solve_fpt(h, 0)) return *s;
    for (int k = 1;; k *= 2) {
        if (k >= l) return *hcd::solve_fpt(h, l); // deleting all hedges always works
        if (auto s = hcd::solve_fpt(h, k)) return *s;
    }
}

int cmd_solve(const std::string& input, const std::string& algo,
              std::optional<int> budget, int cap, const std::string& output) {
    hcd::HedgeGraph h = hcd::parse_hedge_graph(read_file(input));
    hcd::Solution sol;
    std::string chosen = algo;
    if (algo == "auto") {
        if (hcd::is_acyclic(hcd::build_intersection_graph(h)))
            chosen = "acyclic";
        else if (hcd::structural_stats(h, 0).bi_hedge)
            chosen = "approx2";
        else
            chosen = "fpt";
        std::cerr << "auto: using " << chosen << "\n";
    }
    if (chosen == "brute") {
        sol = hcd::solve_bruteforce(h);
    } else if (chosen == "fpt") {
        if (budget) {
            auto s = hcd::solve_fpt(h, *budget);
            if (!s) {
                std::cerr << "no solution within budget k=" << *budget << "\n";
                return 1;
            }
            sol = *s;
        } else {
            sol = fpt_doubling(h);
        }
    } else if (chosen == "delta") {
        sol = hcd::solve_delta_bounded(h, cap);
    } else if (chosen == "approx2") {
        sol = hcd::solve_approx2_bihedge(h);
    } else if (chosen == "acyclic") {
        sol = hcd::solve_acyclic(h);
    } else {
        throw hcd::InputError("unknown algorithm '" + algo + "'");
    }
    if (budget && chosen != "fpt" &&
        static_cast<int>(sol.deleted.size()) > *budget) {
        std::cerr << "solution of size " << sol.deleted.size()
                  << " exceeds budget k=" << *budget << "\n";
        return 1;
    }
    std::cerr << "deleted " << sol.deleted.size() << " of " << h.hedge_count()
              << " hedges\n";
    emit(output, hcd::serialize_solution(h, sol.deleted));
    return 0;
}

int cmd_verify(const std::string& input, const std::string& solution) {
    hcd::HedgeGraph h = hcd::parse_hedge_graph(read_file(input));
    auto ids = hcd::resolve_solution(h, hcd::parse_solution(read_file(solution)));
    hcd::Verdict v = hcd::validate_solution(h, ids);
    if (v.valid) {
        std::cout << "valid\n";
        return 0;
    }
    auto [a, b, c] = *v.witness;
    std::cout << "invalid: induced P3 (" << a + 1 << "," << b + 1 << "," << c + 1
              << ") remains\n";
    return 1;
}

void write_map(const std::string& path,
               const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (path.empty()) return;
    std::ostringstream out;
    for (const auto& [from, to] : pairs) out << from << " " << to << "\n";
    write_file(path, out.str());
}

int cmd_reduce(const std::string& from, const std::string& to, const std::string& input,
               const std::string& output, const std::string& map_path) {
    const std::string text = read_file(input);
    if (from == "vc" && to == "hcd") {
        hcd::HedgeGraph g = hcd::parse_hedge_graph(text); // hedges ignored
        hcd::SimpleGraph base = hcd::SimpleGraph::build(g.vertex_count(), g.edges());
        hcd::VcToHcd r = hcd::vc_to_hcd(base);
        for (int v : r.dropped_isolated)
            std::cerr << "warning: dropping isolated vertex " << v + 1 << "\n";
        std::vector<std::pair<std::string, std::string>> pairs;
        for (auto [v, x] : r.vertex_to_hedge)
            pairs.emplace_back(std::to_string(v + 1), r.graph.hedge_token(x));
        emit(output, hcd::serialize(r.graph));
        write_map(map_path, pairs);
        return 0;
    }
    if (from == "minones" && to == "hcd") {
        hcd::FormulaToHcd r = hcd::minones_to_hcd(hcd::parse_formula(text));
        emit(output, hcd::serialize(r.graph));
        write_map(map_path, r.var_to_hedge);
        return 0;
    }
    if (from == "propsat" && to == "hcd") {
        hcd::ConstantElimination e = hcd::eliminate_constants(hcd::parse_formula(text));
        if (e.infeasible) {
            std::cout << "infeasible\n";
            return 1;
        }
        for (const auto& v : e.eliminated)
            std::cerr << "note: variable " << v << " forced to 0\n";
        hcd::FormulaToHcd r = hcd::propsat_to_hcd(e.formula);
        emit(output, hcd::serialize(r.graph));
        write_map(map_path, r.var_to_hedge);
        return 0;
    }
    if (from == "hcd" && (to == "minones" || to == "propsat")) {
        hcd::HedgeGraph h = hcd::parse_hedge_graph(text);
        hcd::HcdToFormula r = to == "minones" ? hcd::hcd_to_minones(h)
                                              : hcd::hcd_to_propsat(h);
        emit(output, hcd::serialize(r.formula));
        write_map(map_path, r.hedge_to_var);
        return 0;
    }
    throw hcd::InputError("unsupported reduction " + from + " -> " + to);
}

int cmd_gen(const std::string& family, std::uint64_t seed, int n, int hedges, double p,
            const std::string& host_kind, int host_size, const std::string& output) {
    hcd::InstanceFamily spec;
    if (family == "deltap3") spec.family = hcd::Family::deltap3;
    else if (family == "random") spec.family = hcd::Family::random_partition;
    else if (family == "bihedge") spec.family = hcd::Family::bihedge;
    else if (family == "acyclic") spec.family = hcd::Family::acyclic;
    else if (family == "hosted") spec.family = hcd::Family::hosted;
    else throw hcd::InputError("unknown family '" + family + "'");
    spec.seed = seed;
    spec.n = n;
    spec.hedges = hedges;
    spec.density = p;
    spec.host_size = host_size;
    if (!host_kind.empty()) {
        spec.host_kind_set = true;
        if (host_kind == "path") spec.host_kind = hcd::HostKind::path;
        else if (host_kind == "clique") spec.host_kind = hcd::HostKind::clique;
        else throw hcd::InputError("unknown host kind '" + host_kind + "'");
    }
    emit(output, hcd::serialize(hcd::generate(spec)));
    return 0;
}

int cmd_stats(const std::string& input, int cap) {
    hcd::HedgeGraph h = hcd::parse_hedge_graph(read_file(input));
    hcd::TripleCatalog cat = hcd::enumerate_triples(h);
    int p3_internal = 0, k3_by_count[4] = {0, 0, 0, 0};
    for (const auto& t : cat.p3s) p3_internal += t.kind == hcd::P3Kind::internal;
    for (const auto& t : cat.k3s) ++k3_by_count[t.hedge_count];
    std::ostringstream out;
    out << "vertices: " << h.vertex_count() << "\n";
    out << "edges: " << h.edge_count() << "\n";
    out << "hedges: " << h.hedge_count() << "\n";
    out << "p3: " << cat.p3s.size() << " (internal " << p3_internal << ", simple "
        << cat.p3s.size() - p3_internal << ")\n";
    out << "k3: " << cat.k3s.size() << " (1-hedge " << k3_by_count[1] << ", 2-hedge "
        << k3_by_count[2] << ", 3-hedge " << k3_by_count[3] << ")\n";
    hcd::StructuralStats st = hcd::structural_stats(h, cap);
    out << "bi-hedge: " << (st.bi_hedge ? "yes" : "no") << "\n";
    if (st.delta_exceeds_cap)
        out << "delta-max: exceeds cap " << cap << "\n";
    else
        out << "delta-max: " << st.delta_max << " (cap " << cap << ")\n";
    out << "intersection-acyclic: "
        << (hcd::is_acyclic(hcd::build_intersection_graph(h)) ? "yes" : "no") << "\n";
    std::cout << out.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hedge Cluster Deletion toolkit"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string s_algo = "auto", s_input, s_output;
    int s_k = -1, s_cap = 3;
    solve->add_option("--algo", s_algo, "brute|fpt|delta|approx2|acyclic|auto")
        ->check(CLI::IsMember({"brute", "fpt", "delta", "approx2", "acyclic", "auto"}));
    solve->add_option("--input", s_input)->required();
    solve->add_option("--k", s_k, "solution budget");
    solve->add_option("--cap", s_cap, "packing cap for the delta solver");
    solve->add_option("--output", s_output);

    auto* verify = app.add_subcommand("verify", "check a solution file");
    std::string v_input, v_solution;
    verify->add_option("--input", v_input)->required();
    verify->add_option("--solution", v_solution)->required();

    auto* reduce = app.add_subcommand("reduce", "translate between problems");
    std::string r_from, r_to, r_input, r_output, r_map;
    reduce->add_option("--from", r_from)->required()
        ->check(CLI::IsMember({"vc", "minones", "propsat", "hcd"}));
    reduce->add_option("--to", r_to)->required()
        ->check(CLI::IsMember({"hcd", "minones", "propsat"}));
    reduce->add_option("--input", r_input)->required();
    reduce->add_option("--output", r_output);
    reduce->add_option("--map", r_map);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    std::string g_family, g_host_kind, g_output;
    std::uint64_t g_seed = 0;
    int g_n = 0, g_l = 0, g_host_size = 0;
    double g_p = 0.0;
    gen->add_option("--family", g_family)->required()
        ->check(CLI::IsMember({"deltap3", "random", "bihedge", "acyclic", "hosted"}));
    gen->add_option("--seed", g_seed)->required();
    gen->add_option("--n", g_n);
    gen->add_option("--l", g_l);
    gen->add_option("--p", g_p);
    gen->add_option("--host-kind", g_host_kind)
        ->check(CLI::IsMember({"path", "clique"}));
    gen->add_option("--host-size", g_host_size);
    gen->add_option("--output", g_output);

    auto* stats = app.add_subcommand("stats", "structural report");
    std::string t_input;
    int t_cap = 3;
    stats->add_option("--input", t_input)->required();
    stats->add_option("--cap", t_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(s_input, s_algo,
                             s_k >= 0 ? std::optional<int>(s_k) : std::nullopt, s_cap,
                             s_output);
        if (verify->parsed()) return cmd_verify(v_input, v_solution);
        if (reduce->parsed()) return cmd_reduce(r_from, r_to, r_input, r_output, r_map);
        if (gen->parsed())
            return cmd_gen(g_family, g_seed, g_n, g_l, g_p, g_host_kind, g_host_size,
                           g_output);
        if (stats->parsed()) return cmd_stats(t_input, t_cap);
    } catch (const hcd::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hcd::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
