#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopftwist {

enum class ErrorKind {
  ZeroElement,
  DimensionMismatch,
  FieldMismatch,
  NotMonic,
  NotSquarefree,
  BadRing,
  KernelRankError,
  NoFreeGenerator,
  NotCommutative,
  NotSeparable,
  NotASquare,
  LatticeNotFree,
  H1Failure,
  H2Failure,
  NotEquivariant,
  FreenessUncertified,
  DualLatticeMismatch,
  SingularForm,
  NotAUnit,
  BadGroupTable,
  BadParameter,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every library operation; `kind()` names the failed contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hopftwist
