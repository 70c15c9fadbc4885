#include "luttflow/effective_model.hpp"

#include <cmath>
#include <numbers>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {

constexpr double pi = std::numbers::pi;

double vel_square(double nu, double nu4g, int m) {
  const double s = 1.0 - m * nu4g;
  return s * s - 4.0 * nu * nu;
}

}  // namespace

std::string_view to_string(CorrTag t) {
  switch (t) {
    case CorrTag::C2: return "2C";
    case CorrTag::S2: return "2S";
    case CorrTag::SC2: return "2SC";
    case CorrTag::TC2: return "2TC";
    case CorrTag::SC1: return "1SC";
    case CorrTag::C1: return "1C";
    case CorrTag::S1: return "1S";
  }
  return "?";
}

void EffectiveParams::validate() const {
  if (!(c > 0.0)) fail(ErrorKind::InvalidVelocity, "c must be positive");
  if (!(Z > 0.0)) fail(ErrorKind::DomainViolation, "Z must be positive");
}

Anomalies anomaly_params(const EffectiveParams& p) {
  p.validate();
  return {(p.g_par + p.g_perp) / (8.0 * pi * p.c), (p.g_par - p.g_perp) / (8.0 * pi * p.c),
          p.g4 / (4.0 * pi * p.c)};
}

ChannelVelocities channel_velocities(double nu_gamma, double nu4_gamma) {
  const double sp = vel_square(nu_gamma, nu4_gamma, +1);
  const double sm = vel_square(nu_gamma, nu4_gamma, -1);
  if (!(sp > 0.0) || !(sm > 0.0))
    fail(ErrorKind::StrongCouplingBreakdown, "velocity square is not positive");
  ChannelVelocities v;
  v.v_plus = std::sqrt(sp);
  v.v_minus = std::sqrt(sm);
  v.v = v.v_minus / v.v_plus;
  return v;
}

ChannelVelocities rho_velocities(const Anomalies& an) {
  return channel_velocities(an.nu_rho, an.nu4);
}

ChannelVelocities sigma_velocities(const Anomalies& an) {
  return channel_velocities(an.nu_sigma, -an.nu4);
}

EtaZeta eta_zeta(const ChannelVelocities& vel, double nu_gamma) {
  const double pm = vel.v_plus * vel.v_minus;
  const double sq = vel.v_plus * vel.v_plus + vel.v_minus * vel.v_minus;
  return {-0.5 + (4.0 - sq) / (4.0 * pm), 2.0 * nu_gamma / pm};
}

KPair K_pair(double nu_rho, double nu4) {
  const ChannelVelocities v = channel_velocities(nu_rho, nu4);
  const double pm = v.v_plus * v.v_minus;
  const double a = 1.0 - 2.0 * nu_rho;
  const double b = 1.0 + 2.0 * nu_rho;
  KPair k{(a * a - nu4 * nu4) / pm, (b * b - nu4 * nu4) / pm};

  const double eta = eta_zeta(v, nu_rho).eta;
  if (std::abs(k.K * k.K_tilde - 1.0) > 1e-12 || std::abs(4.0 * eta - (k.K + k.K_tilde - 2.0)) > 1e-12)
    fail(ErrorKind::StrongCouplingBreakdown, "K identities lost to round-off");
  return k;
}

double K_sqrt_form(double nu_rho, double nu4) {
  const double r1 = (1.0 - 2.0 * nu_rho - nu4) / (1.0 + 2.0 * nu_rho - nu4);
  const double r2 = (1.0 - 2.0 * nu_rho + nu4) / (1.0 + 2.0 * nu_rho + nu4);
  if (!(r1 > 0.0) || !(r2 > 0.0)) fail(ErrorKind::StrongCouplingBreakdown, "K radicand not positive");
  return std::sqrt(r1) * std::sqrt(r2);
}

std::map<CorrTag, double> X_table(double eta_rho, double zeta_rho) {
  const double lo = 2.0 + 2.0 * eta_rho - 2.0 * zeta_rho;
  const double hi = 2.0 + 2.0 * eta_rho + 2.0 * zeta_rho;
  return {{CorrTag::C2, lo},  {CorrTag::S2, lo},  {CorrTag::SC2, hi},
          {CorrTag::TC2, hi}, {CorrTag::SC1, 2.0 + 4.0 * eta_rho},
          {CorrTag::C1, 2.0}, {CorrTag::S1, 2.0}};
}

ExponentSet exponents(const Anomalies& an) {
  ExponentSet e;
  e.rho = rho_velocities(an);
  e.sigma = sigma_velocities(an);
  const EtaZeta r = eta_zeta(e.rho, an.nu_rho);
  const EtaZeta s = eta_zeta(e.sigma, an.nu_sigma);
  e.eta_rho = r.eta;
  e.zeta_rho = r.zeta;
  e.eta_sigma = s.eta;
  e.zeta_sigma = s.zeta;
  const KPair k = K_pair(an.nu_rho, an.nu4);
  e.K = k.K;
  e.K_tilde = k.K_tilde;
  e.X2 = X_table(e.eta_rho, e.zeta_rho);
  return e;
}

cplx two_point(double x0, double x1, const EffectiveParams& p, const Anomalies& an, int omega) {
  p.validate();
  if (x0 == 0.0 && x1 == 0.0) fail(ErrorKind::OriginSingularity, "two-point function at x = 0");
  const ChannelVelocities vr = rho_velocities(an);
  const ChannelVelocities vs = sigma_velocities(an);
  const double er = eta_zeta(vr, an.nu_rho).eta;
  const double es = eta_zeta(vs, an.nu_sigma).eta;
  const double w = omega >= 0 ? 1.0 : -1.0;

  const double ar = p.c * vr.v * x0;
  const double as = p.c * vs.v * x0;
  const double amp = std::pow(ar * ar + x1 * x1, -0.5 * er) * std::pow(as * as + x1 * x1, -0.5 * es);
  const cplx den = principal_sqrt(cplx(ar, w * x1)) * principal_sqrt(cplx(as, w * x1));
  return amp / (2.0 * pi * p.Z) / den;
}

cplx density_correlation(double x0, double x1, const EffectiveParams& p, const Anomalies& an,
                         DensityChannel ch, int omega_prime, int omega) {
  p.validate();
  if (x0 == 0.0 && x1 == 0.0) fail(ErrorKind::OriginSingularity, "density correlation at x = 0");
  const bool rho = ch == DensityChannel::Rho;
  const double nu = rho ? an.nu_rho : an.nu_sigma;
  const double nu4g = rho ? an.nu4 : -an.nu4;
  const ChannelVelocities vel = channel_velocities(nu, nu4g);
  const double vp = vel.v_plus, vm = vel.v_minus;
  const double w = omega >= 0 ? 1.0 : -1.0;
  const bool diag = (omega_prime >= 0) == (omega >= 0);

  // coefficients of the (p0 -/+ i v c p1) poles
  double cp, cm;
  if (diag) {
    cp = 0.5 * ((1.0 - nu4g) / vp + (1.0 + nu4g) / vm);
    cm = 0.5 * ((1.0 - nu4g) / vp - (1.0 + nu4g) / vm);
  } else {
    cp = nu * (1.0 / vp - 1.0 / vm);
    cm = nu * (1.0 / vp + 1.0 / vm);
  }
  // (1 - v^2)/(v+ -/+ v-) == (v+ +/- v-)/v+^2
  const double fp = (vp + vm) / (vp * vp);
  const double fm = (vp - vm) / (vp * vp);
  const cplx zp(vel.v * x0, w * x1 / p.c);
  const cplx zm(vel.v * x0, -w * x1 / p.c);
  const double pref = 1.0 / (8.0 * pi * pi * p.c * p.c * p.Z * p.Z);
  return pref * (cp * fp / (zp * zp) - cm * fm / (zm * zm));
}

double density_pair_correlation(double x0, double x1, const EffectiveParams& p,
                                const Anomalies& an, DensityChannel ch) {
  cplx s = 0.0;
  for (int wp : {1, -1})
    for (int w : {1, -1}) s += density_correlation(x0, x1, p, an, ch, wp, w);
  return 2.0 * s.real();
}

Anomalies tune_to_hubbard(double lambda, double v0, double v2pf, double pF_bar) {
  const double tol = 1e-9;
  if (!(v2pf > 0.0)) fail(ErrorKind::DomainViolation, "v2pf must be positive");
  if (!(pF_bar > tol && pF_bar < pi - tol) || std::abs(pF_bar - pi / 2) < tol)
    fail(ErrorKind::DomainViolation, "pF_bar must avoid 0, pi/2 and pi");
  const double s = std::sin(pF_bar);
  return {lambda * (v0 - 0.5 * v2pf) / (2.0 * pi * s), 0.0, lambda * v0 / (2.0 * pi * s)};
}

}  // namespace luttflow
