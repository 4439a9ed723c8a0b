#pragma once

#include <stdexcept>
#include <string>

namespace resil {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Series ingestion / validation.
class WrongLengthError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public Error {
public:
    using Error::Error;
};

class NegativeValueError : public Error {
public:
    using Error::Error;
};

class OutOfRangeError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

// Bad argument to a dispatch/simulation entry point.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

class EmptySubsetError : public Error {
public:
    using Error::Error;
};

class EmptyGridError : public Error {
public:
    using Error::Error;
};

// Configuration problem; the message names the offending field.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& msg)
        : Error("config field '" + field + "': " + msg), field_(field) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace resil
