#include "hcd/formula.hpp"

#include <algorithm>

#include "hcd/errors.hpp"

namespace hcd {

int clause_arity(ClauseKind k) {
    switch (k) {
        case ClauseKind::f1: return 3;
        case ClauseKind::g1: return 2;
        case ClauseKind::g2: return 2;
        case ClauseKind::f2: return 1;
        case ClauseKind::fp: return 3;
    }
    return 0;
}

const char* clause_name(ClauseKind k) {
    switch (k) {
        case ClauseKind::f1: return "f1";
        case ClauseKind::g1: return "g1";
        case ClauseKind::g2: return "g2";
        case ClauseKind::f2: return "f2";
        case ClauseKind::fp: return "fp";
    }
    return "?";
}

int ConstraintFormula::var_id(const std::string& token) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == token) return static_cast<int>(i);
    return -1;
}

static bool constants_allowed(ClauseKind k) {
    return k == ClauseKind::f1 || k == ClauseKind::fp;
}

void ConstraintFormula::add_clause(ClauseKind kind, const std::vector<std::string>& args) {
    if (static_cast<int>(args.size()) != clause_arity(kind))
        throw InputError(std::string(clause_name(kind)) + " takes " +
                         std::to_string(clause_arity(kind)) + " arguments, got " +
                         std::to_string(args.size()));
    Clause c;
    c.kind = kind;
    for (const auto& tok : args) {
        if (tok == "0" || tok == "1") {
            if (!constants_allowed(kind))
                throw InputError(std::string("constant argument not allowed in ") +
                                 clause_name(kind));
            c.args.push_back(Term::of_const(tok == "1"));
            continue;
        }
        int id = var_id(tok);
        if (id < 0) {
            id = static_cast<int>(variables.size());
            variables.push_back(tok);
        }
        c.args.push_back(Term::variable(id));
    }
    clauses.push_back(std::move(c));
}

void validate_formula(const ConstraintFormula& phi) {
    for (const auto& c : phi.clauses) {
        if (static_cast<int>(c.args.size()) != clause_arity(c.kind))
            throw InputError(std::string("bad arity for ") + clause_name(c.kind));
        for (const auto& t : c.args) {
            if (t.is_const()) {
                if (!constants_allowed(c.kind))
                    throw InputError(std::string("constant argument not allowed in ") +
                                     clause_name(c.kind));
            } else if (t.var < 0 || t.var >= static_cast<int>(phi.variables.size())) {
                throw InputError("clause references undeclared variable");
            }
        }
    }
}

int Assignment::weight() const {
    int w = 0;
    for (const auto& kv : values) w += kv.second ? 1 : 0;
    return w;
}

Assignment Assignment::all_zero(const ConstraintFormula& phi) {
    Assignment a;
    for (const auto& v : phi.variables) a.values[v] = false;
    return a;
}

Assignment Assignment::from_mask(const ConstraintFormula& phi, unsigned long long mask) {
    Assignment a;
    for (std::size_t i = 0; i < phi.variables.size(); ++i)
        a.values[phi.variables[i]] = (mask >> i) & 1ULL;
    return a;
}

bool eval_clause(const Clause& clause, const std::vector<char>& values) {
    auto value = [&](const Term& t) -> bool {
        return t.is_const() ? t.constant : values[t.var] != 0;
    };
    switch (clause.kind) {
        case ClauseKind::f1: {
            int ones = 0;
            for (const auto& t : clause.args) ones += value(t) ? 1 : 0;
            return ones != 1;
        }
        case ClauseKind::g1:
            return !value(clause.args[0]) || value(clause.args[1]);
        case ClauseKind::g2:
            return value(clause.args[0]) || value(clause.args[1]);
        case ClauseKind::f2:
            return value(clause.args[0]);
        case ClauseKind::fp:
            return !value(clause.args[0]) || value(clause.args[1]) || value(clause.args[2]);
    }
    return false;
}

bool eval_formula(const ConstraintFormula& phi, const Assignment& a) {
    validate_formula(phi);
    std::vector<char> values(phi.variables.size(), 0);
    for (std::size_t i = 0; i < phi.variables.size(); ++i) {
        auto it = a.values.find(phi.variables[i]);
        if (it == a.values.end())
            throw InputError("assignment misses variable '" + phi.variables[i] + "'");
        values[i] = it->second ? 1 : 0;
    }
    for (const auto& c : phi.clauses)
        if (!eval_clause(c, values)) return false;
    return true;
}

} // namespace hcd
