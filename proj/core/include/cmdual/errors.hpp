#ifndef CMDUAL_ERRORS_HPP
#define CMDUAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParameters : Error {
    using Error::Error;
};

struct ReducibleModulus : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct ZeroInverse : Error {
    using Error::Error;
};

struct ZeroArgument : Error {
    using Error::Error;
};

struct SizeLimit : Error {
    using Error::Error;
};

struct NotInPrimeSubfield : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct SingularTraceForm : Error {
    using Error::Error;
};

struct NoMatchingRotation : Error {
    using Error::Error;
};

struct EmptyRepresentation : Error {
    using Error::Error;
};

} // namespace cm

#endif
