#pragma once

#include <stdexcept>
#include <string>

namespace zlq {

/// Raised for out-of-range parameters such as q < 2.
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An object does not fit the board it is used on: vertex out of range,
/// a half sitting on a 1-edge cell, a family built for a different q.
class StructuralError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or incomplete user input that is not line oriented.
class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message)
    {
    }

    auto line() const -> int { return line_; }
    auto message() const -> const std::string & { return message_; }

private:
    int line_;
    std::string message_;
};

} // namespace zlq
