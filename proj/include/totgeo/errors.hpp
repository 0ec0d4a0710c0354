#pragma once

#include <stdexcept>
#include <string>

namespace totgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define TOTGEO_ERROR(NAME)                          \
  struct NAME : Error {                             \
    explicit NAME(const std::string& msg = #NAME)   \
        : Error(std::string(#NAME) + ": " + msg) {} \
  }

TOTGEO_ERROR(EmptyInput);
TOTGEO_ERROR(NotSymmetric);
TOTGEO_ERROR(UnsupportedSpace);
TOTGEO_ERROR(NotApplicable);
TOTGEO_ERROR(NotTangent);
TOTGEO_ERROR(DegeneratePlane);
TOTGEO_ERROR(NotAnLTS);
TOTGEO_ERROR(NotAbelian);
TOTGEO_ERROR(RecipeUnavailable);
TOTGEO_ERROR(OrbitNotFound);
TOTGEO_ERROR(SamplingFailed);
TOTGEO_ERROR(UnsupportedAmbient);
TOTGEO_ERROR(UnsupportedPair);
TOTGEO_ERROR(UsageError);

#undef TOTGEO_ERROR

}  // namespace totgeo
