#include "hcd/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hcd/errors.hpp"

namespace hcd {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        lines.push_back({number, std::move(toks)});
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

long parse_count(const Line& l, const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(l.number, std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace

HedgeGraph parse_hedge_graph(const std::string& text) {
    long n = -1, m = -1, l = -1;
    int header_line = 0;
    std::vector<LabeledEdge> edges;
    std::vector<int> edge_lines;
    std::set<std::pair<int, int>> seen;

    for (const Line& line : significant_lines(text)) {
        if (line.tokens[0] == "p") {
            if (n >= 0) fail(line.number, "duplicate header");
            if (line.tokens.size() != 5 || line.tokens[1] != "hg")
                fail(line.number, "expected 'p hg <n> <m> <l>'");
            n = parse_count(line, line.tokens[2], "vertex count");
            m = parse_count(line, line.tokens[3], "edge count");
            l = parse_count(line, line.tokens[4], "hedge count");
            header_line = line.number;
        } else if (line.tokens[0] == "e") {
            if (line.tokens.size() != 4)
                fail(line.number, "expected 'e <u> <v> <token>'");
            long u = parse_count(line, line.tokens[1], "vertex");
            long v = parse_count(line, line.tokens[2], "vertex");
            if (u == 0 || v == 0) fail(line.number, "vertices are 1-based");
            if (u == v) fail(line.number, "self-loop at vertex " + std::to_string(u));
            auto p = std::minmax(u, v);
            if (!seen.insert({static_cast<int>(p.first), static_cast<int>(p.second)}).second)
                fail(line.number, "duplicate edge {" + std::to_string(p.first) + "," +
                                      std::to_string(p.second) + "}");
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                             line.tokens[3]});
            edge_lines.push_back(line.number);
        } else {
            fail(line.number, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    if (n < 0) throw InputError("missing 'p hg' header");
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u >= n || edges[i].v >= n)
            fail(edge_lines[i], "vertex out of range (n = " + std::to_string(n) + ")");
    if (static_cast<long>(edges.size()) != m)
        fail(header_line, "header declares " + std::to_string(m) + " edges, body has " +
                              std::to_string(edges.size()));
    std::set<std::string> tokens;
    for (const auto& e : edges) tokens.insert(e.hedge);
    if (static_cast<long>(tokens.size()) != l)
        fail(header_line, "header declares " + std::to_string(l) + " hedges, body has " +
                              std::to_string(tokens.size()));
    return HedgeGraph::build(static_cast<int>(n), edges);
}

std::string serialize(const HedgeGraph& h) {
    std::ostringstream out;
    out << "p hg " << h.vertex_count() << " " << h.edge_count() << " "
        << h.hedge_count() << "\n";
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        out << "e " << es[i].first + 1 << " " << es[i].second + 1 << " "
            << h.hedge_token(h.edge_hedge()[i]) << "\n";
    return out.str();
}

ConstraintFormula parse_formula(const std::string& text) {
    long nvars = -1, nclauses = -1;
    int header_line = 0;
    ConstraintFormula phi;
    for (const Line& line : significant_lines(text)) {
        if (line.tokens[0] == "p") {
            if (nvars >= 0) fail(line.number, "duplicate header");
            if (line.tokens.size() != 4 || line.tokens[1] != "cf")
                fail(line.number, "expected 'p cf <nvars> <nclauses>'");
            nvars = parse_count(line, line.tokens[2], "variable count");
            nclauses = parse_count(line, line.tokens[3], "clause count");
            header_line = line.number;
            continue;
        }
        ClauseKind kind;
        if (line.tokens[0] == "f1") kind = ClauseKind::f1;
        else if (line.tokens[0] == "g1") kind = ClauseKind::g1;
        else if (line.tokens[0] == "g2") kind = ClauseKind::g2;
        else if (line.tokens[0] == "f2") kind = ClauseKind::f2;
        else if (line.tokens[0] == "fp") kind = ClauseKind::fp;
        else fail(line.number, "unknown clause kind '" + line.tokens[0] + "'");
        try {
            phi.add_clause(kind, {line.tokens.begin() + 1, line.tokens.end()});
        } catch (const InputError& e) {
            fail(line.number, e.what());
        }
    }
    if (nvars < 0) throw InputError("missing 'p cf' header");
    if (static_cast<long>(phi.clauses.size()) != nclauses)
        fail(header_line, "header declares " + std::to_string(nclauses) +
                              " clauses, body has " + std::to_string(phi.clauses.size()));
    if (static_cast<long>(phi.variables.size()) != nvars)
        fail(header_line, "header declares " + std::to_string(nvars) +
                              " variables, body has " + std::to_string(phi.variables.size()));
    return phi;
}

std::string serialize(const ConstraintFormula& phi) {
    std::ostringstream out;
    out << "p cf " << phi.variables.size() << " " << phi.clauses.size() << "\n";
    for (const auto& c : phi.clauses) {
        out << clause_name(c.kind);
        for (const auto& t : c.args) {
            if (t.is_const())
                out << " " << (t.constant ? "1" : "0");
            else
                out << " " << phi.variables[t.var];
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::string> parse_solution(const std::string& text) {
    long count = -1;
    int header_line = 0;
    std::vector<std::string> tokens;
    for (const Line& line : significant_lines(text)) {
        if (line.tokens[0] == "k") {
            if (count >= 0) fail(line.number, "duplicate 'k' header");
            if (line.tokens.size() != 2) fail(line.number, "expected 'k <count>'");
            count = parse_count(line, line.tokens[1], "count");
            header_line = line.number;
        } else {
            if (line.tokens.size() != 1)
                fail(line.number, "expected one hedge token per line");
            tokens.push_back(line.tokens[0]);
        }
    }
    if (count < 0) throw InputError("missing 'k' header");
    if (static_cast<long>(tokens.size()) != count)
        fail(header_line, "header declares " + std::to_string(count) +
                              " hedges, body has " + std::to_string(tokens.size()));
    std::sort(tokens.begin(), tokens.end());
    for (std::size_t i = 1; i < tokens.size(); ++i)
        if (tokens[i] == tokens[i - 1])
            throw InputError("duplicate hedge token '" + tokens[i] + "' in solution");
    return tokens;
}

std::string serialize_solution(const std::vector<std::string>& tokens) {
    std::vector<std::string> sorted = tokens;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "k " << sorted.size() << "\n";
    for (const auto& t : sorted) out << t << "\n";
    return out.str();
}

std::string serialize_solution(const HedgeGraph& h, const std::vector<HedgeId>& deleted) {
    std::vector<std::string> tokens;
    for (HedgeId x : deleted) tokens.push_back(h.hedge_token(x));
    return serialize_solution(tokens);
}

std::vector<HedgeId> resolve_solution(const HedgeGraph& h,
                                      const std::vector<std::string>& tokens) {
    std::vector<HedgeId> ids;
    for (const auto& t : tokens) {
        auto x = h.hedge_by_token(t);
        if (!x) throw InputError("unknown hedge token '" + t + "'");
        ids.push_back(*x);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace hcd
