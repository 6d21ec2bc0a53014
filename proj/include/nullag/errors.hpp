#pragma once

#include <stdexcept>
#include <string>

namespace nullag {

/// Runtime failure while evaluating an expression tree. Carries the text of
/// the offending sub-expression so reports can point at the exact term.
class EvalError : public std::runtime_error {
 public:
  enum class Kind { division_by_zero, log_of_zero, domain };

  EvalError(Kind kind, std::string offender, const std::string& what)
      : std::runtime_error(what), kind_(kind), offender_(std::move(offender)) {}

  Kind kind() const { return kind_; }
  const std::string& offender() const { return offender_; }

 private:
  Kind kind_;
  std::string offender_;
};

/// Syntax error in the DSL, with a byte offset into the source string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A syntactically valid variable that the caller's variable set forbids.
class ForbiddenVariableError : public ParseError {
 public:
  ForbiddenVariableError(std::size_t position, std::string variable,
                         const std::string& what)
      : ParseError(position, what), variable_(std::move(variable)) {}

  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

/// Rejection sampling could not find an admissible point for some index.
class SamplingExhaustedError : public std::runtime_error {
 public:
  explicit SamplingExhaustedError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A denominator (or log argument) vanished at a concrete time, either at an
/// endpoint or somewhere along an integration path.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(double at_time, const std::string& what)
      : std::runtime_error(what), at_time_(at_time) {}

  double at_time() const { return at_time_; }

 private:
  double at_time_;
};

/// A coefficient pole lies inside the (padded) working interval.
class PoleInIntervalError : public std::runtime_error {
 public:
  PoleInIntervalError(double pole_time, const std::string& what)
      : std::runtime_error(what), pole_time_(pole_time) {}

  double pole_time() const { return pole_time_; }

 private:
  double pole_time_;
};

}  // namespace nullag
