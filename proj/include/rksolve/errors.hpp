#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rksolve {

/// Lexical or syntactic failure. `position` is a 0-based character offset
/// into the source text; for unexpected-end errors it equals the text length.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position, std::string expected = {})
        : std::runtime_error(message + " at position " + std::to_string(position)),
          message_(message),
          position_(position),
          expected_(std::move(expected)) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::string message_;
    std::size_t position_;
    std::string expected_;
};

/// Base for everything `evaluate` can throw.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundVariable : public EvalError {
public:
    explicit UnboundVariable(std::string name)
        : EvalError("unbound variable '" + name + "'"), name_(std::move(name)) {}

    UnboundVariable(std::string name, const std::string& context)
        : EvalError(context + ": unbound variable '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Division by zero, log outside (0, inf), fractional power of a negative
/// base, or a non-finite intermediate result.
class DomainError : public EvalError {
public:
    using EvalError::EvalError;
};

class DisallowedVariable : public EvalError {
public:
    explicit DisallowedVariable(std::string name)
        : EvalError("disallowed variable '" + name + "'"), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class InvalidRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidSteps : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation failure inside a solve, carrying the step index at which the
/// step kernel failed.
class SolveError : public std::runtime_error {
public:
    SolveError(std::size_t step, const std::string& cause)
        : std::runtime_error("step " + std::to_string(step) + ": " + cause), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Convergence order is not measurable: the grid error is below the noise
/// floor at one of the two step sizes.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plot data spans zero width in x or in y.
class DegenerateRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line invocation.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rksolve
