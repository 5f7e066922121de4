#pragma once

#include <stdexcept>
#include <string>

namespace prismatic {

/// An exhaustive search came back empty although a cited theorem guarantees
/// a witness. Signals a bug in the searcher or its caller, never an input error.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

/// A per-graph search budget ran out before a definitive answer.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace prismatic
