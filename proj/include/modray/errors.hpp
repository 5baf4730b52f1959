#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modray {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Input outside the mathematical domain of an operation (e.g. a series
// outside X^-1*O handed to the Artin map).
struct DomainError : Error {
    using Error::Error;
};

// Not enough certified coefficients remain to produce any certified output.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// All known coefficients vanish but the series is not the exact zero, so the
// valuation (hence |.|, inversion, ...) cannot be certified.  A special case
// of precision exhaustion.
struct UncertainValuation : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

struct PoleError : Error {
    using Error::Error;
};

struct NotAffine : Error {
    using Error::Error;
};

struct DegeneratePoints : Error {
    using Error::Error;
};

// A continued-fraction iterate reached an exact rational value; terminal for
// geodesic-section dynamics, whose endpoints must stay irrational.
struct RationalEndpoint : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos, std::string text = {})
        : Error(msg), position(pos), input(std::move(text)) {}
    std::size_t position;
    std::string input;  // the offending text, for caret diagnostics
};

}  // namespace modray
