#pragma once

#include <stdexcept>
#include <string>

namespace exalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EXALG_ERROR(Name)            \
  struct Name : Error {              \
    using Error::Error;              \
  }

EXALG_ERROR(ZeroDeterminant);
EXALG_ERROR(InvalidGenerator);
EXALG_ERROR(UnknownTag);
EXALG_ERROR(NotIndependent);
EXALG_ERROR(UnrecognizedType);
EXALG_ERROR(ValidationFailure);
EXALG_ERROR(ZeroScalar);
EXALG_ERROR(DecompositionFailure);
EXALG_ERROR(InconsistentSystem);
EXALG_ERROR(HalfExponentRejected);
EXALG_ERROR(InsufficientTruncation);
EXALG_ERROR(RamanujanViolation);
EXALG_ERROR(OracleMissing);
EXALG_ERROR(CacheError);
EXALG_ERROR(UnknownTarget);

#undef EXALG_ERROR

}  // namespace exalg
