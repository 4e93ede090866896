#pragma once

#include <stdexcept>
#include <string>

namespace wg {

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad or inconsistent configuration (unknown tag, violated constraint).
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string key = {}, int line = 0)
        : Error(what), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_ = 0;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The curvilinear chart is not invertible (1 + u*gamma <= 0, self-overlap).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Non-finite values or a failed numerical kernel.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A checked mathematical precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace wg
