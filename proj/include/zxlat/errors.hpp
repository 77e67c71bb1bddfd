#pragma once

#include <stdexcept>
#include <string>

namespace zxlat {

#define ZXLAT_ERROR(Name)                                                      \
  class Name : public std::runtime_error {                                     \
  public:                                                                      \
    explicit Name(const std::string& what) : std::runtime_error(what) {}       \
  };

ZXLAT_ERROR(ArityMismatch)
ZXLAT_ERROR(GluingMismatch)
ZXLAT_ERROR(StaleMatch)
ZXLAT_ERROR(TooLarge)
ZXLAT_ERROR(DimensionMismatch)
ZXLAT_ERROR(KernelTooLarge)
ZXLAT_ERROR(NotASymmetry)
ZXLAT_ERROR(NotReversing)
ZXLAT_ERROR(SearchCapExceeded)
ZXLAT_ERROR(BadSize)
ZXLAT_ERROR(BadSurface)
ZXLAT_ERROR(BadCurve)
ZXLAT_ERROR(ParseError)
ZXLAT_ERROR(NonBinaryEntry)
ZXLAT_ERROR(ZeroState)

#undef ZXLAT_ERROR

} // namespace zxlat
