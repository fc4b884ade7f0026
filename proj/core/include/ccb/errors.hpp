#ifndef CCB_ERRORS_HPP
#define CCB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccb {

// Input outside an operation's admissible domain (branch cut, off-locus
// spectral point, malformed file, ...).  Maps to CLI exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Evaluation at a pole of the function.
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

// An iteration or refinement failed to reach its tolerance within its
// budget.  Maps to CLI exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The requested evaluation is admissible but too ill-conditioned to trust.
class ConditioningError : public std::runtime_error {
public:
    explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// No continuation path satisfying the clearance requirements exists.
class PathError : public DomainError {
public:
    explicit PathError(const std::string& what) : DomainError(what) {}
};

} // namespace ccb

#endif
