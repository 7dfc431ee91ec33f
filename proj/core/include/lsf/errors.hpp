#ifndef LSF_ERRORS_HPP
#define LSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsf {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 3; malformed input is a separate ParseFailure (exit code 2).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct InexactDivision : Error {
  InexactDivision() : Error("polynomial division left a nonzero remainder") {}
};

struct ZeroSpecialization : Error {
  ZeroSpecialization() : Error("specialized polynomial is zero") {}
};

struct InvalidLinkData : Error {
  explicit InvalidLinkData(const std::string& what)
      : Error("invalid link polynomial data: " + what) {}
};

struct NotACandidate : Error {
  NotACandidate() : Error("polynomial fails the L-space knot coefficient test") {}
};

struct TooManyDegenerate : Error {
  TooManyDegenerate() : Error("at most one degenerate (infinite) fiber is allowed") {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what) : Error("unsupported: " + what) {}
};

struct NotAKnot : Error {
  NotAKnot() : Error("braid closure has more than one component") {}
};

struct NotPositive : Error {
  NotPositive() : Error("braid word is not positive (or all-negative)") {}
};

struct OutOfProvenRange : Error {
  OutOfProvenRange() : Error("twisted torus braid form is only available for p>0, or p<0 with n<=2") {}
};

}  // namespace lsf

#endif
