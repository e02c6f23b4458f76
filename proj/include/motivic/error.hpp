#ifndef MOTIVIC_ERROR_HPP
#define MOTIVIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOverCap : Error {
    using Error::Error;
};

struct SubUnderflow : Error {
    using Error::Error;
};

struct Overflow : Error {
    using Error::Error;
};

struct NonzeroR0 : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

/* a contributing term produced a negative tau/rho exponent; unreachable if the
   degree bookkeeping is right, so this is an assertion, not a user error */
struct NegativeExponent : InternalError {
    using InternalError::InternalError;
};

struct SyntaxError : Error {
    SyntaxError(std::string msg, std::size_t offset, std::string expected)
        : Error(std::move(msg)), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

struct IOFailure : Error {
    using Error::Error;
};

struct VersionMismatch : Error {
    using Error::Error;
};

struct CorruptTable : Error {
    using Error::Error;
};

}  // namespace motivic

#endif
