#ifndef FSORELAY_ERRORS_HPP
#define FSORELAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fso {

/// Invalid argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Result not representable in double precision.
class OverflowError : public std::range_error {
  public:
    explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

/// A numerical routine failed to converge; message carries diagnostics.
class EvaluationError : public std::runtime_error {
  public:
    explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario or argument validation failure; message names the offending field.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Constrained optimization could not produce a feasible solution.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fso

#endif
