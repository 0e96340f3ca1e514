#pragma once

#include <stdexcept>
#include <string>

namespace hardysym {

/// Base class for every domain error thrown by this library. Plain
/// std::invalid_argument is still used for garden-variety misuse
/// (negative sizes, mismatched lengths and the like).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested coefficient band does not fit on the sampling grid.
class BandTooWide : public Error {
 public:
  using Error::Error;
};

/// A coefficient table is shorter than the truncation size needs.
class TableTooShort : public Error {
 public:
  using Error::Error;
};

/// Operator too small for the requested compression.
class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

/// Probe polynomial pushed past the truncation boundary: deg(f) plus the
/// requested co-analytic depth must stay below the matrix size.
class ProbeTooDeep : public Error {
 public:
  using Error::Error;
};

/// The probe vanishes (below the zero threshold) at every grid point.
class AllPointsMasked : public Error {
 public:
  using Error::Error;
};

/// Every probe pair has an empty joint validity mask.
class NoComparablePoints : public Error {
 public:
  using Error::Error;
};

/// The defining series diverges, so the requested coefficient is refused.
class DomainRefused : public Error {
 public:
  using Error::Error;
};

/// Weight sequence fails the strict growth requirement.
class GrowthViolation : public Error {
 public:
  using Error::Error;
};

/// Denominator of a ratio symbol vanishes somewhere on the test grid.
class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// Evaluation point lies on or outside the unit circle.
class DiskViolation : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed; carries a 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hardysym
