#pragma once

#include <stdexcept>
#include <string>

namespace vcpack {

// Argument outside the mathematical domain of the operation.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested quantity diverges (e.g. beta(gamma) as gamma -> 1).
struct divergence_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A stated precondition of a lemma/theorem check is violated. Reported
// distinctly from verdicts and from plain domain errors.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed the configured budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem-backed invariant failed. Always an implementation bug, never a
// recoverable condition; carries a distinct type so audits can abort loudly.
struct theorem_contradiction : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace vcpack
