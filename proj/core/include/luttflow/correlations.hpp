#pragma once

#include <array>
#include <string_view>

#include "luttflow/effective_model.hpp"

namespace luttflow {

enum class ResponseChannel { C, S, SC, TC };
std::string_view to_string(ResponseChannel a);

// zeta-bar for z, C, S, SC, TC
inline constexpr std::array<double, 5> kZetaBar = {0.0, -1.5, 0.5, -1.5, 0.5};
double zeta_bar(ResponseChannel a);

struct AsymptoticContext {
  double lambda = 0.0;
  double v2pf = 1.0;
  double pF = 0.0;
  double vF = 1.0;
  double b = 0.0;
  double K = 1.0;
  double eta = 0.0;  // (K + 1/K - 2) / 4
  double eta_rho = 0.0;
  double v_rho = 1.0;
  double v_sigma = 1.0;
  double zeta_tilde_sc = 0.0;
  ExponentSet exponents;  // the effective-model set the numbers above came from

  // 2 X for the oscillating C/S and SC parts and the tilde SC part
  double X2(ResponseChannel a) const;
  double X2_tilde_sc() const { return K + 1.0 / K; }
};

AsymptoticContext make_context(double lambda, double v0, double v2pf, double pF_bar,
                               double zeta_tilde_sc = 0.0);

double log_factor(double x0, double x1, const AsymptoticContext& ctx);
double omega_asymptotic(ResponseChannel a, double x0, double x1, const AsymptoticContext& ctx);
double s0_bar(double x0, double x1, const AsymptoticContext& ctx);
double s2_asymptotic(double x0, double x1, const AsymptoticContext& ctx);
cplx spin_charge_two_point(double x0, double x1, const AsymptoticContext& ctx, int omega);

}  // namespace luttflow
