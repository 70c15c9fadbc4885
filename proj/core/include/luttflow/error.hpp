#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace luttflow {

enum class ErrorKind {
  DegenerateDenominator,
  PerturbationBoundViolated,
  Divergence,
  EmptyInput,
  InvalidVelocity,
  InvalidGamma,
  DomainViolation,
  NotConverged,
  NoRoot,
  RangeError,
  UndefinedAtScale,
  StrongCouplingBreakdown,
  OriginSingularity,
  ZeroMomentum,
  TooClose,
  BandEdge,
  HalfFilling,
  ConfigError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this exception; `kind()` lets
/// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace luttflow
