// errors.hpp
// Exception types shared by all modules.

#ifndef LAWSON_ERRORS_HPP
#define LAWSON_ERRORS_HPP

#include <stdexcept>

namespace lawson {

// Argument lies outside the mathematical domain of the operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested quantity diverges at the given argument (e.g. the complete
// integral of the first kind at parameter 1).
struct DivergentError : std::domain_error {
  using std::domain_error::domain_error;
};

// Integer parameters fail validation (signs, coprimality, regime).
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A metric or denominator degenerated below the safe threshold.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branch tracking of an inverse-trigonometric substitution failed.
struct BranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lawson

#endif
