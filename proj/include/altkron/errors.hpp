#pragma once

#include <stdexcept>
#include <string>

namespace altkron {

/// Malformed input data: bad JSON, out-of-range indices, broken unit axiom.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical premise of an operation does not hold for the given data
/// (non-commutative base for CD, alpha*A not central, invalid form, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure of one named stage of a multi-stage pipeline.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace altkron
