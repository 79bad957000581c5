#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rootsum {

// Base of all library errors; `kind()` is the stable machine-readable name
// reported by the CLI on exit code 3.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define ROOTSUM_ERROR(Name)                              \
  class Name : public Error {                            \
  public:                                                \
    explicit Name(const std::string& what)               \
        : Error(#Name, what) {}                          \
  }

ROOTSUM_ERROR(RangeError);          // overflow / non-finite value produced
ROOTSUM_ERROR(PoleError);           // evaluation at (or too near) a zero of p
ROOTSUM_ERROR(DivByZeroError);      // vanishing denominator in a ratio
ROOTSUM_ERROR(DomainError);         // parameter outside its admissible range
ROOTSUM_ERROR(DepthError);          // recursion depth guard tripped
ROOTSUM_ERROR(NormalizationError);  // caller-side normalization missing
ROOTSUM_ERROR(CapError);            // node count or budget cap exceeded
ROOTSUM_ERROR(BracketError);        // bisection bracket precondition violated
ROOTSUM_ERROR(CountUnstableError);  // root count stays low-confidence
ROOTSUM_ERROR(SeparationError);     // extremal radius not isolated enough
ROOTSUM_ERROR(ParseError);          // malformed input text
ROOTSUM_ERROR(UsageError);          // bad CLI invocation

#undef ROOTSUM_ERROR

}  // namespace rootsum
