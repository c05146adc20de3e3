#pragma once

#include <stdexcept>
#include <string>

namespace degen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DEGEN_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(std::string(#Name ": ") + what) {} \
  }

DEGEN_DEFINE_ERROR(DomainError);
DEGEN_DEFINE_ERROR(ParseError);
DEGEN_DEFINE_ERROR(NotDivisible);

// Series engine.
DEGEN_DEFINE_ERROR(DivisionByNonUnit);
DEGEN_DEFINE_ERROR(NonzeroLowOrder);
DEGEN_DEFINE_ERROR(NonzeroConstantInner);
DEGEN_DEFINE_ERROR(BadConstantTerm);
DEGEN_DEFINE_ERROR(IndexBeyondTruncation);

// Families and identities.
DEGEN_DEFINE_ERROR(UnsupportedOrder);
DEGEN_DEFINE_ERROR(UnknownFamily);
DEGEN_DEFINE_ERROR(UnknownIdentity);
DEGEN_DEFINE_ERROR(RangeError);

#undef DEGEN_DEFINE_ERROR

}  // namespace degen
