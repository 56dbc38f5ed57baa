#pragma once

#include <stdexcept>
#include <string>

namespace gridsub {

/// Search exceeded its node budget. Partial counts are discarded.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A checked mathematical identity or structural assertion failed.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidFlip : public std::invalid_argument {
public:
    explicit InvalidFlip(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the longest-diagonal descent when a step breaks one of its
/// asserted properties (parallelogram quad, shorter bimonotone replacement).
class DescentViolation : public ValidationError {
public:
    explicit DescentViolation(const std::string& what) : ValidationError(what) {}
};

}  // namespace gridsub
