#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "luttflow/hubbard_rg.hpp"

namespace luttflow {

// No (1,TC): there is no local operator for it.
enum class RenormChannel { Z, C1, S1, SC1, C2, S2, SC2, TC2 };

inline constexpr std::array<RenormChannel, 8> kRenormChannels = {
    RenormChannel::Z,  RenormChannel::C1, RenormChannel::S1,  RenormChannel::SC1,
    RenormChannel::C2, RenormChannel::S2, RenormChannel::SC2, RenormChannel::TC2};

std::string_view to_string(RenormChannel c);
std::optional<RenormChannel> parse_channel(std::string_view s);
constexpr std::size_t index_of(RenormChannel c) { return static_cast<std::size_t>(c); }

// zeta-bar / 2 for the (2, alpha) channels, 0 for the others
double log_power_limit(RenormChannel c);

// Multiplicative correction hook: returns r such that the factor becomes factor + r.
using RenormRemainder =
    std::function<double(RenormChannel, std::int64_t h, const CouplingVector&)>;

double step_renorm(RenormChannel channel, double zhat, const CouplingVector& v, cplx g2_inf,
                   double a);

struct RenormTrace {
  std::vector<std::array<double, 8>> zhat;  // depth-indexed like HubbardFlowTrace
  double g2_inf = 0.0;
  double a = 0.0;

  double at(RenormChannel c, std::int64_t h) const;
  std::int64_t h_min() const { return -static_cast<std::int64_t>(zhat.size()) + 1; }
};

RenormTrace run_renorm(const HubbardFlowTrace& flow, const RenormRemainder& remainder = {});

double q_coefficient(RenormChannel channel, const RenormTrace& trace, std::int64_t h, cplx g10,
                     double a);

cplx anomalous_exponent(RenormChannel channel, cplx g2_inf, double v_F);

}  // namespace luttflow
