#include "luttflow/hubbard_rg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {

bool finite_c(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_range(const HubbardFlowTrace& t, std::int64_t h, std::int64_t j0) {
  if (!(h <= j0 && j0 <= 0)) fail(ErrorKind::RangeError, "need h <= j0 <= 0");
  if (h < t.h_min()) fail(ErrorKind::RangeError, "h below the trace depth");
}

}  // namespace

bool CouplingVector::is_real() const {
  return g1.imag() == 0.0 && g2.imag() == 0.0 && g4.imag() == 0.0 && delta.imag() == 0.0 &&
         nu.imag() == 0.0;
}

bool CouplingVector::finite() const {
  return finite_c(g1) && finite_c(g2) && finite_c(g4) && finite_c(delta) && finite_c(nu);
}

void ModelInputs::validate() const {
  if (!(std::abs(mu) < 1.0)) fail(ErrorKind::DomainViolation, "|mu| must be < 1");
  if (!(gamma > 1.0)) fail(ErrorKind::InvalidGamma, "gamma must exceed 1");
  if (!(v2pf > 0.0)) fail(ErrorKind::DomainViolation, "v2pf must be positive (repulsive)");
  if (!std::isfinite(v0)) fail(ErrorKind::DomainViolation, "v0 must be finite");
  if (!finite_c(lambda)) fail(ErrorKind::DomainViolation, "lambda must be finite");
  const double pf = std::acos(mu);
  if (std::abs(pf - std::numbers::pi / 2) < 1e-9)
    fail(ErrorKind::DomainViolation, "pF = pi/2 (half filling) is excluded");
}

double ModelInputs::pF() const { return std::acos(mu); }
double ModelInputs::vF() const { return std::sin(std::acos(mu)); }

const CouplingVector& HubbardFlowTrace::at(std::int64_t h) const {
  if (h > 0 || h < h_min()) fail(ErrorKind::RangeError, "scale outside trace");
  return v[static_cast<std::size_t>(-h)];
}

double leading_coefficient(double v_F, double gamma) {
  if (!(v_F > 0.0)) fail(ErrorKind::InvalidVelocity, "v_F must be positive");
  if (!(gamma > 1.0)) fail(ErrorKind::InvalidGamma, "gamma must exceed 1");
  return std::log(gamma) / (std::numbers::pi * v_F);
}

CouplingVector init_couplings(const ModelInputs& in) {
  in.validate();
  CouplingVector v;
  v.g1 = 2.0 * in.lambda * in.v2pf;
  v.g2 = 2.0 * in.lambda * in.v0;
  v.g4 = v.g2;
  return v;
}

HubbardFlowTrace run_flow(const CouplingVector& v0, const ModelInputs& in, std::int64_t h_min,
                          const FlowOptions& opts) {
  in.validate();
  if (h_min >= 0) fail(ErrorKind::RangeError, "h_min must be negative");
  const double a_lead = leading_coefficient(in.vF(), in.gamma);
  const FlowSchedule sched = opts.schedule ? *opts.schedule : FlowSchedule::constant(a_lead);

  double radius = std::numeric_limits<double>::infinity();
  if (opts.sector) {
    opts.sector->validate();
    if (!in_sector(v0.g1, *opts.sector))
      fail(ErrorKind::DomainViolation, "g1 at scale 0 lies outside the configured sector");
    radius = opts.sector->escape_radius();
  }

  HubbardFlowTrace t;
  t.a = sched.a;
  t.j0 = opts.j0;
  const auto depth = static_cast<std::size_t>(-h_min);
  t.v.reserve(depth + 1);
  t.v.push_back(v0);

  CouplingVector c = v0;
  for (std::size_t d = 0; d < depth; ++d) {
    const auto j = -static_cast<std::int64_t>(d);
    if (sched.sigma && std::abs(sched.sigma(static_cast<std::int64_t>(d))) >
                           sched.c0 * std::abs(v0.g1) * (1.0 + 1e-12))
      fail(ErrorKind::PerturbationBoundViolated, "schedule perturbation exceeds c0|g1,0|");
    const cplx a_j = sched.coefficient(static_cast<std::int64_t>(d));
    const cplx g1sq = c.g1 * c.g1;
    CouplingVector n = c;
    n.g1 = c.g1 - a_j * g1sq;
    n.g2 = c.g2 - 0.5 * sched.a * g1sq;
    n.nu = in.gamma * c.nu + (opts.beta_nu ? opts.beta_nu(j) : cplx{});
    if (opts.remainder) {
      const CouplingVector r = opts.remainder(j, c);
      n.g1 += r.g1;
      n.g2 += r.g2;
      n.g4 += r.g4;
      n.delta += r.delta;
      n.nu += r.nu;
    }
    if (!n.finite() || std::abs(n.g1) > radius)
      fail(ErrorKind::Divergence, "g1 escaped at h = " + std::to_string(j - 1));
    if (std::abs(n.nu) > opts.nu_escape)
      fail(ErrorKind::Divergence, "nu escaped at h = " + std::to_string(j - 1));
    t.v.push_back(n);
    c = n;
  }
  return t;
}

cplx g2_limit(const HubbardFlowTrace& t) {
  const CouplingVector& deep = t.v.back();
  return deep.g2 - 0.5 * deep.g1;
}

FixedPoint fixed_point(const HubbardFlowTrace& t, const ModelInputs& in) {
  in.validate();
  if (t.v.empty()) fail(ErrorKind::NotConverged, "empty trace");
  const CouplingVector& top = t.v.front();
  const CouplingVector& deep = t.v.back();
  if (std::abs(top.g1) > 0.0 && !(std::abs(deep.g1) < 0.01 * std::abs(top.g1)))
    fail(ErrorKind::NotConverged, "trace too shallow: |g1(h_min)| >= 0.01 |g1(0)|");
  FixedPoint fp;
  fp.limit = deep;
  fp.limit.g1 = 0.0;
  fp.limit.g2 = g2_limit(t);
  fp.g1_residual = deep.g1;
  fp.g2_pred = top.g2 - 0.5 * top.g1;
  fp.g4_pred = top.g4;
  return fp;
}

TunedNu tune_nu_trajectory(const CouplingVector& v0, const ModelInputs& in, const BetaNu& beta_nu,
                           std::int64_t h_min, const TuneOptions& opts) {
  in.validate();
  (void)v0;
  if (h_min >= 0) fail(ErrorKind::RangeError, "h_min must be negative");
  const auto depth = static_cast<std::size_t>(-h_min);
  TunedNu out;
  out.trajectory.assign(depth + 1, cplx{});
  if (!beta_nu) return out;

  // The only solution that does not blow up like gamma^{-h} is the one fixed
  // at the deep end; sweep the recursion nu_{h-1} = gamma nu_h + b(h) upward.
  for (std::size_t d = depth; d-- > 0;) {
    const auto h = -static_cast<std::int64_t>(d);
    out.trajectory[d] = (out.trajectory[d + 1] - beta_nu(h)) / in.gamma;
  }
  out.nu0 = out.trajectory.front();

  const double lam = std::abs(in.lambda);
  for (std::size_t d = 0; d <= depth; ++d) {
    const double envelope =
        opts.k_bound * lam * std::pow(in.gamma, -opts.theta * static_cast<double>(d));
    if (std::abs(out.trajectory[d]) > envelope * (1.0 + 1e-12))
      fail(ErrorKind::NoRoot, "no nu0 keeps |nu_h| within the decay envelope (violated at h = -" +
                                  std::to_string(d) + ")");
  }
  return out;
}

cplx tune_nu(const CouplingVector& v0, const ModelInputs& in, const BetaNu& beta_nu,
             std::int64_t h_min, const TuneOptions& opts) {
  return tune_nu_trajectory(v0, in, beta_nu, h_min, opts).nu0;
}

LogSum g1_log_sum(const HubbardFlowTrace& t, std::int64_t h, std::int64_t j0) {
  require_range(t, h, j0);
  std::complex<long double> s = 0;
  for (std::int64_t j = h; j <= j0; ++j) s += std::complex<long double>(t.at(j).g1);
  const cplx g = t.at(j0).g1;
  const double n = static_cast<double>(j0 - h);
  return {cplx(s), std::log(1.0 + t.a * g * n) / t.a};
}

LogSum g2_log_sum(const HubbardFlowTrace& t, std::int64_t h, std::int64_t j0) {
  require_range(t, h, j0);
  const cplx g2inf = g2_limit(t);
  std::complex<long double> s = 0;
  for (std::int64_t j = h; j <= j0; ++j) s += std::complex<long double>(t.at(j).g2 - g2inf);
  const cplx g = t.at(j0).g1;
  const double n = static_cast<double>(j0 - h);
  return {cplx(s), std::log(1.0 + t.a * g * n) / (2.0 * t.a)};
}

}  // namespace luttflow
