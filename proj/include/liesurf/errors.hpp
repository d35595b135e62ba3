#pragma once

#include <stdexcept>
#include <string>

namespace liesurf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// input-text problems: malformed numerals, spec files, CLI payloads
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// mathematically invalid input: bad metric, unknown surface, failed spec checks
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero") {}
};

struct UnknownSurface : DomainError {
    explicit UnknownSurface(const std::string& name) : DomainError("unknown surface: " + name) {}
};

struct MissingParam : DomainError {
    explicit MissingParam(const std::string& name) : DomainError("missing parameter: " + name) {}
};

struct InvalidParam : DomainError {
    explicit InvalidParam(const std::string& msg) : DomainError(msg) {}
};

struct InvalidMetric : DomainError {
    explicit InvalidMetric(const std::string& msg) : DomainError(msg) {}
};

struct ValidationError : DomainError {
    explicit ValidationError(const std::string& msg) : DomainError(msg) {}
};

struct NonIntegrable : DomainError {
    explicit NonIntegrable(const std::string& msg) : DomainError(msg) {}
};

struct OutOfInterval : Error {
    explicit OutOfInterval(const std::string& msg) : Error(msg) {}
};

}  // namespace liesurf
