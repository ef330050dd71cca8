#pragma once

#include <stdexcept>

namespace sds {

// Thrown when an operation would exceed a size cap (phase-space vertex limit,
// orbit step limit). Distinct from invalid input: the request is well-formed,
// just too large. The CLI maps this to its resource-cap exit code.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a factorial order scan is requested beyond the vertex budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sds
