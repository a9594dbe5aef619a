#pragma once

#include <stdexcept>
#include <string>

namespace wfk {

// Base of every library exception. The name() tag is stable and used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string tag, const std::string& what)
      : std::runtime_error(what), tag_(std::move(tag)) {}
  const std::string& name() const noexcept { return tag_; }

 private:
  std::string tag_;
};

#define WFK_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

WFK_DEFINE_ERROR(DivisionByZero)
WFK_DEFINE_ERROR(ClosureBoundExceeded)
WFK_DEFINE_ERROR(NonInvertibleMatrix)
WFK_DEFINE_ERROR(DiagonalizationFailure)
WFK_DEFINE_ERROR(GroupMismatch)
WFK_DEFINE_ERROR(BudgetExceeded)
WFK_DEFINE_ERROR(CutoffTooSmall)
WFK_DEFINE_ERROR(DegeneratePairing)
WFK_DEFINE_ERROR(ModelMismatch)
WFK_DEFINE_ERROR(IndexOutOfRange)
WFK_DEFINE_ERROR(MissingMatrixModel)
WFK_DEFINE_ERROR(NotAffineADE)
WFK_DEFINE_ERROR(NonIntegralResult)
WFK_DEFINE_ERROR(ZeroPrefactor)
WFK_DEFINE_ERROR(InvalidInput)

#undef WFK_DEFINE_ERROR

}  // namespace wfk
