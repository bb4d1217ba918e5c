#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transgress {

enum class Errc {
    PresentationMismatch,
    NonRingCoefficients,
    NonIntegralCoefficient,
    NonTerminatingRewrite,
    NotHomogeneous,
    TorsionNotAllowed,
    AmbiguousTorsion,
    OddDegree,
    InsufficientRoots,
    UnknownEntry,
    NotAComponentSpace,
    SourceMismatch,
    UnregisteredMonomial,
    NoLoopRule,
    DegreeExhausted,
    DegreeCapExceeded,
    SyntaxError,
    UnknownGenerator,
    UnknownMap,
    InvariantViolation,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse failure with the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace transgress
