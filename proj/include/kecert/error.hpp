#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kecert {

enum class ErrorKind {
  ContextMismatch,
  DivisionByZero,
  ParseError,
  ArityMismatch,
  InhomogeneousComponents,
  DegenerateLeadingForm,
  PointOnHyperplaneAtInfinity,
  IndeterminatePoint,
  NotSquarefree,
  ZeroMap,
  DuplicatePoints,
  UnknownKind,
  BadParams,
  RankMismatch,
  NotARoot,
  BadIndices,
  CapExceeded,
  NotNormal,
  InvalidConfig,
  UnresolvedRoots,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kecert
