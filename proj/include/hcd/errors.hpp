#pragma once

#include <stdexcept>
#include <string>

namespace hcd {

// Malformed input: bad file syntax, out-of-range vertex, unknown hedge,
// disallowed clause kind, violated size guard.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The input is well-formed but outside the algorithm's structural
// precondition (non-bi-hedge, cyclic intersection graph, delta cap,
// non-bipartite cover graph, violated list property).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hcd
