#pragma once

#include <stdexcept>
#include <string>

namespace hypercount {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text; carries the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Violated precondition or invalid argument (exit code 1 territory).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Input is legal but outside the exact-arithmetic limits this tool is
// willing to handle; an explicit refusal, never a wrong answer (exit code 2).
class DeskScaleError : public Error {
public:
    explicit DeskScaleError(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed to re-verify (exit code 3).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace hypercount
