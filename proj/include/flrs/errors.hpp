#pragma once

#include <stdexcept>
#include <string>

namespace flrs {

/// Invalid user-supplied parameters. `constraint()` names the violated rule.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string constraint, const std::string& message)
        : std::invalid_argument(message), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// Operation undefined for the given operand (e.g. inverse of zero).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematical guarantee was observed to fail; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace flrs
