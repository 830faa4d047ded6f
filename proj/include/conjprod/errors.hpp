#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjprod {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A spec or argument is malformed (non-prime where a prime is required, bad arity, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

/// Element shape does not match the group it is used with.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A Cayley table fails a group axiom.
class NotAGroup : public Error {
public:
    using Error::Error;
};

/// Enumeration, orbit or product would exceed a configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A set claimed to be closed under conjugation is not.
class NotInvariant : public Error {
public:
    using Error::Error;
};

/// A structural claim checked inside a library routine was found false.
class ClaimViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace conjprod
