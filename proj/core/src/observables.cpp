#include "luttflow/observables.hpp"

#include <cmath>
#include <numbers>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {
constexpr double pi = std::numbers::pi;
}

BarredParams barred_couplings(double lambda, double v0, double v2pf, double v_F,
                              double delta_bar) {
  if (!(v2pf > 0.0)) fail(ErrorKind::DomainViolation, "v2pf must be positive");
  if (!(v_F > 0.0)) fail(ErrorKind::InvalidVelocity, "v_F must be positive");
  if (!std::isfinite(lambda) || !std::isfinite(v0))
    fail(ErrorKind::DomainViolation, "non-finite model input");
  BarredParams p;
  p.g1_bar = 2.0 * lambda * v2pf;
  p.g2_bar = 2.0 * lambda * v0;
  p.g4_bar = p.g2_bar;
  p.delta_bar = delta_bar;
  p.c_bar = v_F * (1.0 + delta_bar);
  if (!(p.c_bar > 0.0)) fail(ErrorKind::DomainViolation, "c_bar must be positive");
  return p;
}

BarredAnomalies barred_anomalies(const BarredParams& p) {
  return {(p.g2_bar - 0.5 * p.g1_bar) / (4.0 * pi * p.c_bar), p.g4_bar / (4.0 * pi * p.c_bar)};
}

double K_bar(double nu_rho_bar, double nu4_bar) { return K_pair(nu_rho_bar, nu4_bar).K; }

double K_bar_sqrt_form(double nu_rho_bar, double nu4_bar) {
  return K_sqrt_form(nu_rho_bar, nu4_bar);
}

double v_rho_bar(const BarredAnomalies& an) {
  return channel_velocities(an.nu_rho_bar, an.nu4_bar).v;
}

ObservableSet susceptibility_drude(double K_bar, double c_bar, double v_rho_bar) {
  if (!(K_bar > 0.0) || !(c_bar > 0.0) || !(v_rho_bar > 0.0))
    fail(ErrorKind::DomainViolation, "observable inputs must be positive");
  ObservableSet o;
  o.K_bar = K_bar;
  o.v_rho_bar = v_rho_bar;
  o.v = c_bar * v_rho_bar;
  o.kappa = K_bar / (pi * o.v);
  o.drude = K_bar * o.v / pi;
  return o;
}

double omega_C_hat(double p0, double p1, const ObservableSet& o) {
  if (p0 == 0.0 && p1 == 0.0) fail(ErrorKind::ZeroMomentum, "p = 0");
  const double vp2 = o.v * o.v * p1 * p1;
  return o.K_bar / (pi * o.v) * vp2 / (p0 * p0 + vp2);
}

double drude_hat(double p0, double p1, const ObservableSet& o) {
  if (p0 == 0.0 && p1 == 0.0) fail(ErrorKind::ZeroMomentum, "p = 0");
  const double vp2 = o.v * o.v * p1 * p1;
  return o.v / pi * o.K_bar * p0 * p0 / (p0 * p0 + vp2);
}

ObservableSet hubbard_observables(double lambda, double v0, double v2pf, double pF_bar,
                                  double delta_bar) {
  const double vF = std::sin(pF_bar);
  const BarredParams p = barred_couplings(lambda, v0, v2pf, vF, delta_bar);
  const BarredAnomalies an = barred_anomalies(p);
  return susceptibility_drude(K_bar(an.nu_rho_bar, an.nu4_bar), p.c_bar, v_rho_bar(an));
}

}  // namespace luttflow
