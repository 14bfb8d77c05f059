#ifndef QION_ERRORS_HPP
#define QION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qion {

// Invalid physical inputs or violated preconditions.
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failure at runtime (non-convergence, step underflow, ...).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qion

#endif
