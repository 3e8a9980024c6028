#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// algebra
struct SymplecticOddDimension : Error { using Error::Error; };
struct DimensionTooSmall : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };

// tensorspace
struct SlotOutOfRange : Error { using Error::Error; };
struct EqualSlots : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct OddRank : Error { using Error::Error; };

// casimir
struct DegenerateKilling : Error { using Error::Error; };
struct InvalidGeneratorLabel : Error { using Error::Error; };

// projectors
struct IdentityViolation : Error { using Error::Error; };
struct NeedsSo8Refinement : Error { using Error::Error; };
struct WrongAlgebra : Error { using Error::Error; };
struct NonIntegerTrace : Error { using Error::Error; };

// vogel
struct DegenerateVogelPoint : Error { using Error::Error; };

// cli
struct UnknownOperator : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace casimir
