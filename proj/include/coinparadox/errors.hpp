#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coinparadox {

/// Argument outside the mathematical domain of an operation
/// (time outside the horizon, k > n, bad bet index, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A trace that violates its structural invariants (no flips, no t=0 flip).
class InvalidTraceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Game inputs rejected during validation. Carries one message per offending entry.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> offenses);

    const std::vector<std::string>& offenses() const noexcept { return offenses_; }

private:
    std::vector<std::string> offenses_;
};

} // namespace coinparadox
