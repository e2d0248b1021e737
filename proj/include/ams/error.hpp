#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ams {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A brute-force operation was asked to enumerate more atoms than allowed.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t atoms, std::size_t cap)
        : Error("enumeration cap exceeded: " + std::to_string(atoms) + " atoms > cap " + std::to_string(cap))
        , atoms_(atoms)
        , cap_(cap) {}
    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t atoms_;
    std::size_t cap_;
};

// Input text did not follow the expected grammar.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg)
        , line_(line)
        , column_(column)
        , message_(msg) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

// Learned edges were rejected by the safety guard.
class SafetyViolation : public Error {
public:
    using Error::Error;
};

} // namespace ams
