#pragma once

#include <stdexcept>
#include <string>

namespace khayyam {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// parser
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};
class DegreeError : public Error { using Error::Error; };
class LeadingSignError : public Error { using Error::Error; };

// parameters out of their domain (non-positive segment, invalid locus configuration)
class DomainError : public Error { using Error::Error; };

enum class ClassifyFailure {
  ExcludedAllPositive,  ///< every term on one side; no positive root can exist
  PureCube,             ///< x^3 = c^3, not one of the thirteen conic cases
  Degenerate,           ///< zero constant term; not a genuine cubic case
};

class ClassificationError : public Error {
 public:
  ClassificationError(ClassifyFailure reason, const std::string& what)
      : Error(what), reason_(reason) {}
  ClassifyFailure reason() const noexcept { return reason_; }

 private:
  ClassifyFailure reason_;
};

// conics
class KindError : public Error { using Error::Error; };
class OffCurveError : public Error { using Error::Error; };
class DegenerateConic : public Error { using Error::Error; };

// solver
class ProportionalConics : public Error { using Error::Error; };
class ZeroPolynomial : public Error { using Error::Error; };

// taxonomy
class FamilyMismatch : public Error { using Error::Error; };

// render
class EmptyViewport : public Error { using Error::Error; };

}  // namespace khayyam
