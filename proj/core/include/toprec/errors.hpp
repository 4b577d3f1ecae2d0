#pragma once

#include <stdexcept>
#include <string>

namespace toprec {

// Every failure raised by the engine derives from Error; the kind() string is
// the machine-readable tag used in CLI failure reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TOPREC_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  };

TOPREC_DEFINE_ERROR(DivisionByZero)
TOPREC_DEFINE_ERROR(TruncationExhausted)
TOPREC_DEFINE_ERROR(InsufficientOrder)
TOPREC_DEFINE_ERROR(ParseError)
TOPREC_DEFINE_ERROR(VariableMismatch)
TOPREC_DEFINE_ERROR(UnsupportedOperation)
TOPREC_DEFINE_ERROR(NotRegular)
TOPREC_DEFINE_ERROR(RamificationNotRational)
TOPREC_DEFINE_ERROR(RamificationNotSimple)
TOPREC_DEFINE_ERROR(DegenerateCurve)
TOPREC_DEFINE_ERROR(DegenerateKernel)
TOPREC_DEFINE_ERROR(EvalAtPole)
TOPREC_DEFINE_ERROR(NotHomogeneousPair)
TOPREC_DEFINE_ERROR(UnsupportedModel)
TOPREC_DEFINE_ERROR(CompatibilityViolation)
TOPREC_DEFINE_ERROR(TauMismatch)
TOPREC_DEFINE_ERROR(CurveMismatch)
TOPREC_DEFINE_ERROR(IdentityViolation)
TOPREC_DEFINE_ERROR(UnexpectedPole)
TOPREC_DEFINE_ERROR(SingularPsiAt)
TOPREC_DEFINE_ERROR(ConfigError)

#undef TOPREC_DEFINE_ERROR

}  // namespace toprec
