#pragma once

#include <map>
#include <string>
#include <vector>

namespace hcd {

/// Clause kinds of the Boolean constraint formulas the reductions emit.
///   f1(a,b,c) -- satisfied unless exactly one argument is 1 (symmetric)
///   g1(a,b)   -- !a | b
///   g2(a,b)   -- a | b
///   f2(a)     -- a
///   fp(a,b,c) -- !a | b | c
/// Constants 0/1 may appear as arguments of f1 and fp only.
enum class ClauseKind { f1, g1, g2, f2, fp };

int clause_arity(ClauseKind k);
const char* clause_name(ClauseKind k);

struct Term {
    int var = -1;          // index into ConstraintFormula::variables
    bool constant = false; // value when var < 0

    static Term variable(int id) { return Term{id, false}; }
    static Term of_const(bool v) { return Term{-1, v}; }
    bool is_const() const { return var < 0; }

    bool operator==(const Term&) const = default;
};

struct Clause {
    ClauseKind kind = ClauseKind::f1;
    std::vector<Term> args;

    bool operator==(const Clause&) const = default;
};

struct ConstraintFormula {
    std::vector<std::string> variables; // declaration order
    std::vector<Clause> clauses;

    int var_id(const std::string& token) const; // -1 when unknown

    /// Appends a clause given by argument tokens ("0"/"1" are constants),
    /// declaring unseen variables. Validates arity and constant placement.
    void add_clause(ClauseKind kind, const std::vector<std::string>& args);

    bool operator==(const ConstraintFormula&) const = default;
};

/// Checks arities, constant placement and term indices; throws InputError.
void validate_formula(const ConstraintFormula& phi);

struct Assignment {
    std::map<std::string, bool> values;

    int weight() const;
    static Assignment all_zero(const ConstraintFormula& phi);
    /// Bit i of `mask` is the value of phi.variables[i].
    static Assignment from_mask(const ConstraintFormula& phi, unsigned long long mask);
};

/// True iff every clause is satisfied under `a` (with constants
/// substituted). Throws InputError if `a` misses a formula variable.
bool eval_formula(const ConstraintFormula& phi, const Assignment& a);

bool eval_clause(const Clause& clause, const std::vector<char>& values);

} // namespace hcd
