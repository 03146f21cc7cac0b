#pragma once

#include <stdexcept>
#include <string>

namespace risr {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments, malformed documents, violated preconditions.
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

// Input sequence rejected by the validator (lift/project preconditions).
class ValidationError : public InvalidInputError {
public:
    explicit ValidationError(const std::string& what) : InvalidInputError(what) {}
};

// Syntax error in a document, annotated with a position where known.
class ParseError : public InvalidInputError {
public:
    explicit ParseError(const std::string& what) : InvalidInputError(what) {}
};

// A configured budget (state count, enumeration count, vertex bound) was hit.
// Distinct from a "no" answer: the question was not decided.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// A condition the proofs guarantee failed to hold. Can only arise from a bug,
// never from user input.
class InternalConsistencyError : public Error {
public:
    explicit InternalConsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace risr
