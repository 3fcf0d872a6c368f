#pragma once

#include <stdexcept>
#include <string>

namespace adlv {

// Base class for all precondition violations surfaced to callers.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct NotAType : Error { using Error::Error; };
struct NotInImage : Error { using Error::Error; };
struct BadN : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct InvalidInvariants : Error { using Error::Error; };
struct NonIntegralDecomposition : Error { using Error::Error; };
struct NotInBGmu : Error { using Error::Error; };
struct NoneFound : Error { using Error::Error; };
struct NotMinuscule : Error { using Error::Error; };
struct LambdaMismatch : Error { using Error::Error; };
struct CorruptChart : Error { using Error::Error; };

}  // namespace adlv
