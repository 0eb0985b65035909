#pragma once

#include <stdexcept>

namespace maniplex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MANIPLEX_DEFINE_ERROR(Name)   \
  class Name final : public Error {   \
   public:                            \
    using Error::Error;               \
  }

MANIPLEX_DEFINE_ERROR(CompositeP);
MANIPLEX_DEFINE_ERROR(BadDegree);
MANIPLEX_DEFINE_ERROR(DivisionByZero);
MANIPLEX_DEFINE_ERROR(TooLarge);
MANIPLEX_DEFINE_ERROR(BadDeterminant);
MANIPLEX_DEFINE_ERROR(MixedContexts);
MANIPLEX_DEFINE_ERROR(NotASubgroup);
MANIPLEX_DEFINE_ERROR(Unclassified);
MANIPLEX_DEFINE_ERROR(NotValidated);
MANIPLEX_DEFINE_ERROR(RankMismatch);
MANIPLEX_DEFINE_ERROR(FacetTheoremViolation);
MANIPLEX_DEFINE_ERROR(BadCongruence);
MANIPLEX_DEFINE_ERROR(NotExtendible);
MANIPLEX_DEFINE_ERROR(PreconditionFailed);
MANIPLEX_DEFINE_ERROR(SearchExhausted);

#undef MANIPLEX_DEFINE_ERROR

}  // namespace maniplex
