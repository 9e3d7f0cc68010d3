// Error codes and the exception type shared by all gkz modules.
#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

enum class Errc {
  NotStrictlyIncreasing,     // generators violate 0 < k1 < ... < km < d
  GcdNotOne,                 // gcd(k1,...,km,d) != 1
  MZero,                     // empty generator list
  BoundExceeded,             // enumeration hit its safety cap
  SupportMismatch,           // polynomial operands live on different supports
  NotInKernel,               // box operator vector is not in ker(A)
  ExponentInI,               // exponent lies in I(A) where the complement is required
  NotInI,                    // exponent lies outside I(A) where membership is required
  SZero,                     // power-sum order s == 0
  NearSingular,              // roots too close together (or root finding failed)
  MNotOne,                   // discriminant formula needs exactly one interior generator
  DivisionByZeroCoordinate,  // negative exponent at a zero coordinate
  SameRoot,                  // distinguished root indices coincide
  OutsideRegion,             // point outside the series convergence wedge
  BadInput,                  // malformed user input (CLI / JSON layer)
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace gkz
