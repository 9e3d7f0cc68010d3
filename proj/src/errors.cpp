#include "gkz/errors.hpp"

namespace gkz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotStrictlyIncreasing: return "NotStrictlyIncreasing";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::MZero: return "MZero";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::ExponentInI: return "ExponentInI";
    case Errc::NotInI: return "NotInI";
    case Errc::SZero: return "SZero";
    case Errc::NearSingular: return "NearSingular";
    case Errc::MNotOne: return "MNotOne";
    case Errc::DivisionByZeroCoordinate: return "DivisionByZeroCoordinate";
    case Errc::SameRoot: return "SameRoot";
    case Errc::OutsideRegion: return "OutsideRegion";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace gkz
