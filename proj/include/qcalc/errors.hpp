#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QCALC_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

QCALC_DEFINE_ERROR(InexactDivision);
QCALC_DEFINE_ERROR(DivisionByZero);
QCALC_DEFINE_ERROR(PoleAtPoint);
QCALC_DEFINE_ERROR(NonInvertibleSeries);
QCALC_DEFINE_ERROR(ArityError);
QCALC_DEFINE_ERROR(IndexError);
QCALC_DEFINE_ERROR(LogarithmicMoment);
QCALC_DEFINE_ERROR(NotIntegrable);
QCALC_DEFINE_ERROR(NonUnit);
QCALC_DEFINE_ERROR(PrecisionExhausted);
QCALC_DEFINE_ERROR(DivergentTail);
QCALC_DEFINE_ERROR(InadmissibleContext);
QCALC_DEFINE_ERROR(UnknownIdentity);
QCALC_DEFINE_ERROR(NotACounterexample);
QCALC_DEFINE_ERROR(ParseError);

#undef QCALC_DEFINE_ERROR

}  // namespace qcalc
