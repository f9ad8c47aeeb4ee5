#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QHOPF_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

QHOPF_DEFINE_ERROR(DivisionByZero);
QHOPF_DEFINE_ERROR(ConductorOverflow);
QHOPF_DEFINE_ERROR(BudgetExceeded);
QHOPF_DEFINE_ERROR(DimensionMismatch);
QHOPF_DEFINE_ERROR(SingularMatrix);
QHOPF_DEFINE_ERROR(IdentityViolation);
QHOPF_DEFINE_ERROR(ValidationFailure);
QHOPF_DEFINE_ERROR(GenerationFailure);
QHOPF_DEFINE_ERROR(NotUnimodularOrNotSemisimple);
QHOPF_DEFINE_ERROR(CounitDegenerate);
QHOPF_DEFINE_ERROR(NotCentral);
QHOPF_DEFINE_ERROR(NotGrouplike);
QHOPF_DEFINE_ERROR(BadCharacterTable);
QHOPF_DEFINE_ERROR(SplitFailure);
QHOPF_DEFINE_ERROR(NonIntegerDimension);
QHOPF_DEFINE_ERROR(ProjectorNotIdempotent);
QHOPF_DEFINE_ERROR(NotOrdinaryHopf);
QHOPF_DEFINE_ERROR(BetaAlphaSingular);
QHOPF_DEFINE_ERROR(NotScalarAction);
QHOPF_DEFINE_ERROR(ParseError);

#undef QHOPF_DEFINE_ERROR

}  // namespace qhopf
