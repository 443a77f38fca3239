#pragma once

#include <stdexcept>
#include <string>

namespace deephole {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NotPrime : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };

// element arithmetic
struct DivisionByZero : Error { using Error::Error; };
struct MixedFields : Error { using Error::Error; };

// polynomials and words
struct DivisionByZeroPoly : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// codes
struct MessageDegreeTooHigh : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };

// transforms and deep holes
struct InexactDivision : Error { using Error::Error; };
struct NotDeepHoleShape : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };

// table reproduction
struct RowMismatch : Error { using Error::Error; };

}  // namespace deephole
