#include "luttflow/error.hpp"

namespace luttflow {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::PerturbationBoundViolated: return "PerturbationBoundViolated";
    case ErrorKind::Divergence: return "Divergence";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidVelocity: return "InvalidVelocity";
    case ErrorKind::InvalidGamma: return "InvalidGamma";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::UndefinedAtScale: return "UndefinedAtScale";
    case ErrorKind::StrongCouplingBreakdown: return "StrongCouplingBreakdown";
    case ErrorKind::OriginSingularity: return "OriginSingularity";
    case ErrorKind::ZeroMomentum: return "ZeroMomentum";
    case ErrorKind::TooClose: return "TooClose";
    case ErrorKind::BandEdge: return "BandEdge";
    case ErrorKind::HalfFilling: return "HalfFilling";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace luttflow
