#ifndef GZKIT_ERRORS_HPP
#define GZKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gzkit {

// Every kernel failure derives from Error; kind() is the stable machine-readable tag
// used in CLI error JSON.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define GZKIT_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

GZKIT_DEFINE_ERROR(DivisionByZero)
GZKIT_DEFINE_ERROR(SingularSubstitution)
GZKIT_DEFINE_ERROR(InvalidComposition)
GZKIT_DEFINE_ERROR(InvalidIndex)
GZKIT_DEFINE_ERROR(InvalidSubgroup)
GZKIT_DEFINE_ERROR(NotASubgroup)
GZKIT_DEFINE_ERROR(GroupTooLarge)
GZKIT_DEFINE_ERROR(InvalidPair)
GZKIT_DEFINE_ERROR(NotInvariantInput)
GZKIT_DEFINE_ERROR(RegularityError)
GZKIT_DEFINE_ERROR(InvalidSingularSetup)
GZKIT_DEFINE_ERROR(WindowRankError)
GZKIT_DEFINE_ERROR(WindowLeakage)
GZKIT_DEFINE_ERROR(HypothesisViolation)
GZKIT_DEFINE_ERROR(InvalidMove)
GZKIT_DEFINE_ERROR(NameError)
GZKIT_DEFINE_ERROR(ValidationError)

#undef GZKIT_DEFINE_ERROR

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error("ParseError", what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace gzkit

#endif
