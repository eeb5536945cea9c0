#pragma once

#include <stdexcept>
#include <string>

namespace superalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SUPERALG_ERROR(Name)               \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

SUPERALG_ERROR(DimensionMismatch);
SUPERALG_ERROR(OutOfBounds);
SUPERALG_ERROR(NotNilpotent);
SUPERALG_ERROR(UnknownLabel);
SUPERALG_ERROR(NotHomogeneous);
SUPERALG_ERROR(SingularMap);
SUPERALG_ERROR(ParityViolation);
SUPERALG_ERROR(BasisMismatch);
SUPERALG_ERROR(AmbientMismatch);
SUPERALG_ERROR(InDerivedSubalgebra);
SUPERALG_ERROR(BlockStructureError);
SUPERALG_ERROR(ParameterError);
SUPERALG_ERROR(InvalidSpec);
SUPERALG_ERROR(NonDiagonalAction);
SUPERALG_ERROR(ParseError);
SUPERALG_ERROR(DimensionCapExceeded);

#undef SUPERALG_ERROR

}  // namespace superalg
