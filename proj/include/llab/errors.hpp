#pragma once

#include <stdexcept>
#include <string>

namespace llab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input / construction errors.
struct CycleDetected : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };
struct NotIsotone : Error { using Error::Error; };
struct EmptyIdeal : Error { using Error::Error; };
struct EmptyPosetIdeal : Error { using Error::Error; };
struct ZeroIdeal : Error { using Error::Error; };
struct UnitIdeal : Error { using Error::Error; };
struct NotAFace : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct NotMinimal : Error { using Error::Error; };
struct NotABall : Error { using Error::Error; };
struct NotAChain : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotStronglyStable : Error { using Error::Error; };
struct ExceptionCase : Error { using Error::Error; };
struct FullSimplex : Error { using Error::Error; };
struct NotAnUpperBound : Error { using Error::Error; };
struct NotDetermined : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct WidthExceeded : Error { using Error::Error; };

/// A computed object contradicts a structural claim it was supposed to
/// satisfy; carries enough context to locate the offending object.
struct CertificationFailed : Error { using Error::Error; };

} // namespace llab
