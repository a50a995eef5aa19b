#pragma once
#include <stdexcept>
#include <string>

namespace germzeta {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 1 (bad input); verification mismatches use exit code 2 instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg = "zero polynomial not allowed here") : Error(msg) {}
};

struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& msg = "division by zero") : Error(msg) {}
};

// Parse failure; position is a 0-based byte offset into the input.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct NotAGerm : Error {
  explicit NotAGerm(const std::string& msg = "polynomial does not vanish at the origin") : Error(msg) {}
};

struct TooManyThrough : Error {
  explicit TooManyThrough(const std::string& msg = "more than two exceptional curves through a point") : Error(msg) {}
};

// A blow-up center would sit at a non-rational point (repeated or shared
// irrational root of the exceptional-line restriction).
struct UnsupportedIrrationalCenter : Error {
  explicit UnsupportedIrrationalCenter(const std::string& msg) : Error(msg) {}
};

struct ResolutionLimitExceeded : Error {
  explicit ResolutionLimitExceeded(const std::string& msg) : Error(msg) {}
};

struct AlphaZero : Error {
  explicit AlphaZero(const std::string& msg) : Error(msg) {}
};

struct ParamOutOfRange : Error {
  explicit ParamOutOfRange(const std::string& msg) : Error(msg) {}
};

struct InvalidThroughCount : Error {
  explicit InvalidThroughCount(const std::string& msg) : Error(msg) {}
};

struct PoleAtSpecialization : Error {
  explicit PoleAtSpecialization(const std::string& msg) : Error(msg) {}
};

// Denominator of a rational function has a root outside Q; diagnostic only.
struct NonRationalDenominatorRoot : Error {
  explicit NonRationalDenominatorRoot(const std::string& msg) : Error(msg) {}
};

// Internal consistency check failed (these indicate a bug, not bad input).
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

struct BadReport : Error {
  explicit BadReport(const std::string& msg) : Error(msg) {}
};

}  // namespace germzeta
