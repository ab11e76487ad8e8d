#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gabortile {

enum class ErrorKind {
  SingularMatrix,
  NonInteger,
  DimMismatch,
  OddDimension,
  NotSymmetric,
  NotSquare,
  NotLowerTriangular,
  NotAMultiTile,
  LevelOne,
  Unbounded,
  NonRational,
  NonIntegerLevel,
  Overflow,
  NotBlockTriangular,
  UnboundedWindow,
  NonBoxImage,
  TheoremViolation,
  NotFactorizable,
  ZeroInput,
  BadDeterminant,
  Degenerate,
  OnBoundary,
  ParseError,
  InvariantViolation,
};

std::string_view error_kind_name(ErrorKind kind);

// Every library failure is reported through this type; `kind()` carries the
// contract-level error name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gabortile
