#pragma once

#include <string>
#include <vector>

#include "hcd/formula.hpp"
#include "hcd/hedge_graph.hpp"

namespace hcd {

/// Hedge-graph file (.hg): `# comment` lines, one `p hg <n> <m> <l>` header
/// and `e <u> <v> <token>` lines with 1-based vertices. Header counts are
/// validated against the body. Errors carry line numbers.
HedgeGraph parse_hedge_graph(const std::string& text);

/// Canonical form: header, then edges sorted by (u, v).
std::string serialize(const HedgeGraph& h);

/// Formula file (.cf): `p cf <nvars> <nclauses>` header, then one clause
/// per line (`f1 a b c`, `g1 a b`, `g2 a b`, `f2 a`, `fp a b c`); `0`/`1`
/// are constants and are permitted only in f1/fp.
ConstraintFormula parse_formula(const std::string& text);

std::string serialize(const ConstraintFormula& phi);

/// Solution file: `k <count>` then one hedge token per line.
std::vector<std::string> parse_solution(const std::string& text);

/// Tokens are emitted sorted.
std::string serialize_solution(const std::vector<std::string>& tokens);
std::string serialize_solution(const HedgeGraph& h, const std::vector<HedgeId>& deleted);

/// Token list -> hedge ids of h; unknown tokens are input errors.
std::vector<HedgeId> resolve_solution(const HedgeGraph& h,
                                      const std::vector<std::string>& tokens);

} // namespace hcd
