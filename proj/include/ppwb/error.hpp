#pragma once

#include <stdexcept>
#include <string>

namespace ppwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PPWB_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PPWB_DEFINE_ERROR(InvalidArgument);
PPWB_DEFINE_ERROR(ParseError);
PPWB_DEFINE_ERROR(NonPolynomialQuotient);
PPWB_DEFINE_ERROR(InvalidDims);
PPWB_DEFINE_ERROR(DimensionMismatch);
PPWB_DEFINE_ERROR(NotSignable);
PPWB_DEFINE_ERROR(InvalidParams);

#undef PPWB_DEFINE_ERROR

}  // namespace ppwb
