#pragma once

#include <stdexcept>
#include <string>

namespace pia {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One type per failure mode so callers can catch selectively.
struct IllegalStep : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct UnplacedBoundary : Error { using Error::Error; };
struct PartialMap : Error { using Error::Error; };
struct NotUnidirectional : Error { using Error::Error; };
struct FreeVariable : Error { using Error::Error; };
struct NeitherTop : Error { using Error::Error; };
struct NonMonotoneG : Error { using Error::Error; };
struct NotConsecutive : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace pia
