#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed algebraic input: a set that is not closed, an element outside its group.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A configured size bound was exceeded.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition (e.g. an element outside L).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates bad input data or a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// A checked consequence of the theory failed on computed data; always a bug.
class TransferViolationError : public InternalError {
public:
    using InternalError::InternalError;
};

/// Input data failed validation. Carries every failure found, not just the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> problems)
        : Error(join(problems)), problems_(std::move(problems)) {}
    explicit ValidationError(std::string problem)
        : ValidationError(std::vector<std::string>{std::move(problem)}) {}

    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }
    std::vector<std::string> problems_;
};

class InvalidAutomorphismError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonGaloisError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ReducibleModulusError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace hgs
