#pragma once

#include <stdexcept>
#include <string>

namespace lcrp {

// Base class for every error raised by the library. Each subclass maps to one
// failure mode named in the public contracts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LCRP_DEFINE_ERROR(Name)      \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

LCRP_DEFINE_ERROR(DeterminantError);
LCRP_DEFINE_ERROR(ZeroBError);
LCRP_DEFINE_ERROR(NonFiniteError);
LCRP_DEFINE_ERROR(DimensionMismatch);
LCRP_DEFINE_ERROR(DomainError);
LCRP_DEFINE_ERROR(RangeError);
LCRP_DEFINE_ERROR(QuadratureNonConvergence);
LCRP_DEFINE_ERROR(KeyIntegrityError);
LCRP_DEFINE_ERROR(FormatError);
LCRP_DEFINE_ERROR(IoError);
LCRP_DEFINE_ERROR(CrcError);
LCRP_DEFINE_ERROR(OutOfBounds);

#undef LCRP_DEFINE_ERROR

}  // namespace lcrp
