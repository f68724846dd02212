#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace padicmech {

// Every failure raised by the library derives from Error, so callers that do
// not care about the category can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PrimeMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Requested digits lie beyond what a value actually carries.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the region where a series (or a flow built from
/// one) converges. `condition()` names the violated inequality, e.g.
/// "|beta*t|_p <= r_p".
class DomainViolation : public Error {
 public:
  DomainViolation(std::string condition, const std::string& detail)
      : Error("domain violation [" + condition + "]: " + detail),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Q_p(i) is only a field when -1 is a quadratic non-residue, i.e. p = 3 mod 4.
class ExtensionUndefined : public Error {
 public:
  using Error::Error;
};

class HierarchyViolation : public Error {
 public:
  using Error::Error;
};

class VanishingMass : public Error {
 public:
  using Error::Error;
};

class RadiusCollapse : public Error {
 public:
  using Error::Error;
};

}  // namespace padicmech
