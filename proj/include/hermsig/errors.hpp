#ifndef HERMSIG_ERRORS_HPP
#define HERMSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hermsig {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero") {}
};

struct incompatible_towers : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An interval coefficient whose sign could not be separated from zero
/// within the refinement budget.
struct indeterminate_sign : std::runtime_error {
    unsigned precision_reached;
    indeterminate_sign(const std::string& what, unsigned precision)
        : std::runtime_error(what + " (refinement reached " + std::to_string(precision)
                             + " bits; raise HERMSIG_INTERVAL_PREC_CAP)"),
          precision_reached(precision)
    {
    }
};

struct arity_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_hermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant is found violated at runtime.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace hermsig

#endif
