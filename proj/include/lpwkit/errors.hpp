#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lpwkit {

// Errors that mean "the input itself is bad", as opposed to a verification
// verdict about a well-formed object.  The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid document or object (id out of range, duplicate edge, ...).
class MalformedInputError : public InputError {
public:
    explicit MalformedInputError(const std::string& what) : InputError(what) {}
};

// A well-formed object that fails an operation's precondition
// (e.g. an invalid decomposition passed to a constructor).
class PreconditionError : public InputError {
public:
    explicit PreconditionError(const std::string& what) : InputError(what) {}
};

// Oracle budget exhausted.  Exit code 3.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// "The math failed": an internal invariant the pipeline relies on did not
// hold.  Carries a JSON dump of the offending instance so it can be archived
// as a fixture.  Exit code 4.
class InternalAssertionError : public std::runtime_error {
public:
    InternalAssertionError(const std::string& what, std::string instance_json)
        : std::runtime_error(what), instance_json_(std::move(instance_json)) {}

    const std::string& instance_json() const noexcept { return instance_json_; }

private:
    std::string instance_json_;
};

}  // namespace lpwkit
