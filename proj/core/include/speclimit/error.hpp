#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace speclimit {

enum class ErrorKind {
  InvalidModel,
  OutOfRange,
  Unsupported,
  NoBoundMotion,
  RootNotBracketed,
  QuadratureFailure,
  ActionOutOfRange,
  DegeneratePeriod,
  ScanLimitExceeded,
  InvalidCount,
  InvalidSigma,
  DegenerateEnsemble,
  InvalidProtocol,
  Config,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace speclimit
