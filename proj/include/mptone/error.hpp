#pragma once

#include <stdexcept>
#include <string>

namespace mptone {

/// Base for every error raised by the library. The CLI maps subclasses to
/// exit codes: IoError -> 2, everything else -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File missing, unreadable, or unwritable.
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid UTF-8 in an input document.
class DecodeError : public Error {
public:
    DecodeError(const std::string& what, std::size_t byte_offset)
        : Error(what), offset_(byte_offset) {}
    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Input violates a documented invariant or precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Requested date, lag, or horizon lies outside the available data.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Numerically undefined operation (zero price, zero variance).
class ArithmeticError : public Error {
public:
    using Error::Error;
};

}  // namespace mptone
