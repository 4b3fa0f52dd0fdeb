#pragma once

#include <stdexcept>
#include <string>

namespace lvspread {

/// Bad input: violated precondition, invalid parameter, malformed config.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter set fails a named analytic condition (e.g. "intersmall").
class ConditionError : public ValidationError {
public:
    ConditionError(std::string condition, const std::string& what)
        : ValidationError(what), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

/// Iteration failed to converge, bracket failure, or a simulation blew up.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lvspread
