#include "luttflow/renorm_flow.hpp"

#include <cmath>
#include <numbers>

#include "luttflow/error.hpp"

namespace luttflow {

std::string_view to_string(RenormChannel c) {
  switch (c) {
    case RenormChannel::Z: return "z";
    case RenormChannel::C1: return "1C";
    case RenormChannel::S1: return "1S";
    case RenormChannel::SC1: return "1SC";
    case RenormChannel::C2: return "2C";
    case RenormChannel::S2: return "2S";
    case RenormChannel::SC2: return "2SC";
    case RenormChannel::TC2: return "2TC";
  }
  return "?";
}

std::optional<RenormChannel> parse_channel(std::string_view s) {
  for (RenormChannel c : kRenormChannels)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

double log_power_limit(RenormChannel c) {
  switch (c) {
    case RenormChannel::C2:
    case RenormChannel::SC2: return -0.75;
    case RenormChannel::S2:
    case RenormChannel::TC2: return 0.25;
    default: return 0.0;
  }
}

double step_renorm(RenormChannel channel, double zhat, const CouplingVector& v, cplx g2_inf,
                   double a) {
  const double g1 = v.g1.real();
  const double d2 = (v.g2 - g2_inf).real();
  switch (channel) {
    case RenormChannel::C2: return zhat * (1.0 - a * g1 + 0.5 * a * d2);
    case RenormChannel::S2: return zhat * (1.0 + 0.5 * a * d2);
    case RenormChannel::SC2: return zhat * (1.0 - 0.5 * a * g1 - 0.5 * a * d2);
    case RenormChannel::TC2: return zhat * (1.0 + 0.5 * a * g1 - 0.5 * a * d2);
    default: return zhat;
  }
}

double RenormTrace::at(RenormChannel c, std::int64_t h) const {
  if (h > 0 || h < h_min()) fail(ErrorKind::RangeError, "scale outside renormalization trace");
  return zhat[static_cast<std::size_t>(-h)][index_of(c)];
}

RenormTrace run_renorm(const HubbardFlowTrace& flow, const RenormRemainder& remainder) {
  if (flow.v.empty()) fail(ErrorKind::EmptyInput, "empty coupling trace");
  for (const CouplingVector& v : flow.v)
    if (!v.is_real()) fail(ErrorKind::DomainViolation, "renormalization needs real couplings");

  RenormTrace t;
  t.a = flow.a;
  t.g2_inf = g2_limit(flow).real();
  t.zhat.resize(flow.v.size());
  t.zhat[0].fill(1.0);
  for (std::size_t d = 0; d + 1 < flow.v.size(); ++d) {
    const CouplingVector& v = flow.v[d];
    const auto h = -static_cast<std::int64_t>(d);
    for (RenormChannel c : kRenormChannels) {
      const double z = t.zhat[d][index_of(c)];
      double next = step_renorm(c, z, v, t.g2_inf, t.a);
      if (remainder) next += z * remainder(c, h, v);
      t.zhat[d + 1][index_of(c)] = next;
    }
  }
  return t;
}

double q_coefficient(RenormChannel channel, const RenormTrace& trace, std::int64_t h, cplx g10,
                     double a) {
  const double den = std::log(1.0 + a * g10.real() * static_cast<double>(-h));
  if (!(h < 0) || !(den > 0.0) || !std::isfinite(den))
    fail(ErrorKind::UndefinedAtScale, "log(1 + a g10 |h|) is not positive");
  return std::log(trace.at(channel, h)) / den;
}

cplx anomalous_exponent(RenormChannel channel, cplx g2_inf, double v_F) {
  if (!(v_F > 0.0)) fail(ErrorKind::InvalidVelocity, "v_F must be positive");
  const cplx eta = g2_inf / (2.0 * std::numbers::pi * v_F);
  switch (channel) {
    case RenormChannel::C2:
    case RenormChannel::S2: return eta;
    case RenormChannel::SC2:
    case RenormChannel::TC2: return -eta;
    default: return 0.0;
  }
}

}  // namespace luttflow
