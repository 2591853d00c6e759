#pragma once

#include <stdexcept>
#include <string>

namespace ogc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define OGC_DEFINE_ERROR(Name)        \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

OGC_DEFINE_ERROR(InvalidField);
OGC_DEFINE_ERROR(SpecMismatch);
OGC_DEFINE_ERROR(DivisionByZero);
OGC_DEFINE_ERROR(DimensionMismatch);
OGC_DEFINE_ERROR(RankDeficient);
OGC_DEFINE_ERROR(InvalidPivot);
OGC_DEFINE_ERROR(InvalidPair);
OGC_DEFINE_ERROR(SingularTransform);
OGC_DEFINE_ERROR(ArityError);
OGC_DEFINE_ERROR(CostGuardExceeded);
OGC_DEFINE_ERROR(BudgetExceeded);
OGC_DEFINE_ERROR(ParseError);

#undef OGC_DEFINE_ERROR

}  // namespace ogc
