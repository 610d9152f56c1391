#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turncue {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A direction that should be unit-length is not.
class InvalidDirectionError : public Error {
public:
    using Error::Error;
};

/// Target coincides with the user, or a segment has zero length.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// A parameter violates its range constraint. `field()` names the offending key.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& constraint)
        : Error(field + ": " + constraint), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Pose timestamps went backwards.
class TraceOrderError : public Error {
public:
    using Error::Error;
};

/// A new signal arrived while another one is still being guided.
class ConcurrentSignalError : public Error {
public:
    using Error::Error;
};

/// Illegal session transition (e.g. begin_signal without reset).
class SessionStateError : public Error {
public:
    using Error::Error;
};

/// Malformed scenario script or study plan.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A recorded trace does not follow the session state machine.
class IntegrityError : public Error {
public:
    IntegrityError(std::size_t tick, const std::string& what)
        : Error("tick " + std::to_string(tick) + ": " + what), tick_(tick) {}

    std::size_t tick() const noexcept { return tick_; }

private:
    std::size_t tick_;
};

class IoError : public Error {
public:
    IoError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace turncue
