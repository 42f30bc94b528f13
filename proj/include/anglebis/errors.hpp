#pragma once

#include <stdexcept>
#include <string>

namespace anglebis {

/// Base class of every domain error raised by the library. `kind()` is the
/// stable error name the CLI prints on its diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ANGLEBIS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

ANGLEBIS_DEFINE_ERROR(DivisionByZero);
ANGLEBIS_DEFINE_ERROR(ParseError);
ANGLEBIS_DEFINE_ERROR(BadPrime);
ANGLEBIS_DEFINE_ERROR(NotPrime);
ANGLEBIS_DEFINE_ERROR(NotSquarefree);
ANGLEBIS_DEFINE_ERROR(DegreeDropped);
ANGLEBIS_DEFINE_ERROR(InvalidTriangle);
ANGLEBIS_DEFINE_ERROR(InvalidMedians);
ANGLEBIS_DEFINE_ERROR(InvalidAltitudes);
ANGLEBIS_DEFINE_ERROR(NonPositiveInput);
ANGLEBIS_DEFINE_ERROR(NoConvergence);
ANGLEBIS_DEFINE_ERROR(NonPositiveRatio);
ANGLEBIS_DEFINE_ERROR(NoRootInRange);
ANGLEBIS_DEFINE_ERROR(NonPositiveRoots);
ANGLEBIS_DEFINE_ERROR(InvalidArgument);

#undef ANGLEBIS_DEFINE_ERROR

}  // namespace anglebis
