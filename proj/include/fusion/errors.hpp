#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FUSION_ERROR(Name)            \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

// Dangling index, duplicate label, uncovered product pair.
FUSION_ERROR(MalformedRing);
FUSION_ERROR(UnknownLabel);
// A closure or canonical labelling escaped the explored truncation.
FUSION_ERROR(DepthExceeded);
FUSION_ERROR(NotAGroup);
FUSION_ERROR(MalformedFile);
FUSION_ERROR(MalformedInput);
FUSION_ERROR(NotASubobject);
FUSION_ERROR(InvalidRestriction);
FUSION_ERROR(SearchBudgetExceeded);
// Raised when a guaranteed structural fact fails; indicates bad fusion data
// or a library bug.
FUSION_ERROR(InternalInconsistency);

#undef FUSION_ERROR

}  // namespace fusion
