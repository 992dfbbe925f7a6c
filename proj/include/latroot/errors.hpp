#pragma once

#include <stdexcept>
#include <string>

namespace latroot {

// Base class for everything this library can throw on bad domain input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed arguments: dimension mismatches, out-of-range indices, bad specs.
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& msg) : Error(msg) {}
};

struct RankDeficientError : Error {
    explicit RankDeficientError(const std::string& msg) : Error(msg) {}
};

struct NonPrimitiveRayError : Error {
    explicit NonPrimitiveRayError(const std::string& msg) : Error(msg) {}
};

struct SingularConeError : Error {
    explicit SingularConeError(const std::string& msg) : Error(msg) {}
};

struct NotCompleteError : Error {
    explicit NotCompleteError(const std::string& msg) : Error(msg) {}
};

struct NotASubsystemError : Error {
    explicit NotASubsystemError(const std::string& msg) : Error(msg) {}
};

// A Dynkin diagram outside the A/B/C/D catalog (E, F or G shape).
struct UnexpectedTypeError : Error {
    explicit UnexpectedTypeError(const std::string& msg) : Error(msg) {}
};

// Exhaustive search refused: the certified search box is unreasonably large.
struct ScaleError : Error {
    explicit ScaleError(const std::string& msg) : Error(msg) {}
};

// A structural guarantee of the library itself failed; always a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace latroot
