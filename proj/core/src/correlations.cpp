#include "luttflow/correlations.hpp"

#include <cmath>
#include <numbers>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {

constexpr double pi = std::numbers::pi;

double tilde_norm(double x0, double x1, const AsymptoticContext& c) {
  return std::hypot(x1, c.vF * x0);
}

void require_far(double x0, double x1) {
  if (std::hypot(x0, x1) < 1.0) fail(ErrorKind::TooClose, "|x| < 1: asymptotic form invalid");
}

}  // namespace

std::string_view to_string(ResponseChannel a) {
  switch (a) {
    case ResponseChannel::C: return "C";
    case ResponseChannel::S: return "S";
    case ResponseChannel::SC: return "SC";
    case ResponseChannel::TC: return "TC";
  }
  return "?";
}

double zeta_bar(ResponseChannel a) { return kZetaBar[static_cast<std::size_t>(a) + 1]; }

double AsymptoticContext::X2(ResponseChannel a) const {
  switch (a) {
    case ResponseChannel::C: return exponents.X2.at(CorrTag::C2);
    case ResponseChannel::S: return exponents.X2.at(CorrTag::S2);
    case ResponseChannel::SC: return exponents.X2.at(CorrTag::SC2);
    case ResponseChannel::TC: return exponents.X2.at(CorrTag::TC2);
  }
  return 2.0;
}

AsymptoticContext make_context(double lambda, double v0, double v2pf, double pF_bar,
                               double zeta_tilde_sc) {
  const Anomalies an = tune_to_hubbard(lambda, v0, v2pf, pF_bar);
  AsymptoticContext c;
  c.lambda = lambda;
  c.v2pf = v2pf;
  c.pF = pF_bar;
  c.vF = std::sin(pF_bar);
  c.b = 2.0 / (pi * std::sin(pF_bar));
  c.exponents = exponents(an);
  c.K = c.exponents.K;
  c.eta = (c.K + 1.0 / c.K - 2.0) / 4.0;
  c.eta_rho = c.exponents.eta_rho;
  c.v_rho = c.exponents.rho.v;
  c.v_sigma = c.exponents.sigma.v;
  c.zeta_tilde_sc = zeta_tilde_sc;
  return c;
}

double log_factor(double x0, double x1, const AsymptoticContext& c) {
  require_far(x0, x1);
  return 1.0 + c.b * c.lambda * c.v2pf * std::log(std::hypot(x0, x1));
}

double omega_asymptotic(ResponseChannel a, double x0, double x1, const AsymptoticContext& c) {
  const double L = log_factor(x0, x1, c);
  const double r = tilde_norm(x0, x1, c);
  const double t0 = c.vF * c.vF * x0 * x0;
  const double omega0 = (t0 - x1 * x1) / (t0 + x1 * x1);
  const double osc = std::cos(2.0 * c.pF * x1);
  const double zb = zeta_bar(a);
  const double power = std::pow(L, zb) / std::pow(r, c.X2(a));
  switch (a) {
    case ResponseChannel::C:
    case ResponseChannel::S:
      return omega0 / (pi * pi * r * r) + osc * power / (pi * pi);
    case ResponseChannel::SC:
      return -omega0 * osc * std::pow(L, c.zeta_tilde_sc) /
                 (pi * pi * std::pow(r, c.X2_tilde_sc())) -
             power / (pi * pi);
    case ResponseChannel::TC:
      return -c.vF * c.vF / (pi * pi) * power;
  }
  return 0.0;
}

double s0_bar(double x0, double x1, const AsymptoticContext& c) {
  const double r = tilde_norm(x0, x1, c);
  return (c.vF * x0 * std::cos(c.pF * x1) - x1 * std::sin(c.pF * x1)) / (pi * r);
}

double s2_asymptotic(double x0, double x1, const AsymptoticContext& c) {
  const double L = log_factor(x0, x1, c);
  const double r = tilde_norm(x0, x1, c);
  return s0_bar(x0, x1, c) * std::pow(L, kZetaBar[0]) / std::pow(r, 1.0 + c.eta);
}

cplx spin_charge_two_point(double x0, double x1, const AsymptoticContext& c, int omega) {
  if (x0 == 0.0 && x1 == 0.0) fail(ErrorKind::OriginSingularity, "two-point function at x = 0");
  const double w = omega >= 0 ? 1.0 : -1.0;
  const double y = x1 / c.vF;
  const double ar = c.v_rho * x0;
  const double amp = std::pow(ar * ar + y * y, -0.5 * c.eta_rho);
  const cplx den = principal_sqrt(cplx(ar, w * y)) * principal_sqrt(cplx(c.v_sigma * x0, w * y));
  return amp / (2.0 * pi * c.vF) / den;
}

}  // namespace luttflow
