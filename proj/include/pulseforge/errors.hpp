#pragma once

#include <stdexcept>
#include <string>

namespace pulseforge {

// Base class for every recoverable toolkit error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PULSEFORGE_DEFINE_ERROR(Name)      \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

PULSEFORGE_DEFINE_ERROR(InvalidParameter);
PULSEFORGE_DEFINE_ERROR(DomainEmpty);
PULSEFORGE_DEFINE_ERROR(OutsideDomain);
PULSEFORGE_DEFINE_ERROR(OriginCrossing);
PULSEFORGE_DEFINE_ERROR(InequalityViolated);
PULSEFORGE_DEFINE_ERROR(BranchSingular);
PULSEFORGE_DEFINE_ERROR(NonIntegrable);
PULSEFORGE_DEFINE_ERROR(StuckAtZero);
PULSEFORGE_DEFINE_ERROR(OutOfRange);
PULSEFORGE_DEFINE_ERROR(GridTooCoarse);
PULSEFORGE_DEFINE_ERROR(StepTooLarge);
PULSEFORGE_DEFINE_ERROR(NotEven);
PULSEFORGE_DEFINE_ERROR(WindowInsidePulse);
PULSEFORGE_DEFINE_ERROR(Unreachable);
PULSEFORGE_DEFINE_ERROR(NoSaturation);
PULSEFORGE_DEFINE_ERROR(NoClosedForm);
PULSEFORGE_DEFINE_ERROR(SingularPoint);
PULSEFORGE_DEFINE_ERROR(ValidationFailed);

#undef PULSEFORGE_DEFINE_ERROR

}  // namespace pulseforge
