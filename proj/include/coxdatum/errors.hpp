#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxdatum {

enum class ErrorKind {
  Parse,
  Io,
  InvalidDatum,
  UnknownGenerator,
  UnknownExample,
  ModeMismatch,
  ExactSqrtUnavailable,
  ExactUnavailable,
  MixedSignVector,
  DescentInconsistency,
  DuplicateRay,
  InfiniteBond,
  NoDescentAvailable,
  StepCapExceeded,
  NoRealization,
  SpanCondition,
  NotRank2,
  Uncertified,
  Precondition,
  Undetermined,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the engine carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxdatum
