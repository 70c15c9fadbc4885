#include "luttflow/free_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

using lcplx = std::complex<long double>;

// Fermi function without overflow
double fermi_fn(double e, double beta) {
  const double t = beta * e;
  if (t >= 0.0) {
    const double x = std::exp(-t);
    return x / (1.0 + x);
  }
  return 1.0 / (1.0 + std::exp(t));
}

// -d n / d e
double fermi_slope(double e, double beta) {
  const double n = fermi_fn(e, beta);
  return beta * n * (1.0 - n);
}

// G_k(tau) for tau in (-beta, beta]
double mode_propagator(double e, double tau, double beta) {
  if (tau > 0.0) {
    if (e >= 0.0) return std::exp(-e * tau) / (1.0 + std::exp(-beta * e));
    return std::exp(e * (beta - tau)) / (1.0 + std::exp(beta * e));
  }
  if (e >= 0.0) return -std::exp(-e * (tau + beta)) / (1.0 + std::exp(-beta * e));
  return -std::exp(-e * tau) / (1.0 + std::exp(beta * e));
}

// bring tau into (-beta, beta] using G(tau + beta) = -G(tau)
double reduce_time(double tau, double beta, double& sign) {
  sign = 1.0;
  if (tau > beta || tau <= -beta) {
    const double k = std::floor((tau + beta) / (2.0 * beta));
    tau -= 2.0 * beta * k;  // period 2 beta leaves the sign alone
    if (tau <= -beta) tau += 2.0 * beta;
  }
  if (tau > beta) {
    tau -= beta;
    sign = -sign;
  }
  return tau;
}

std::int64_t frequency_span(const LatticeSpec& s) {
  // chi vanishes for |k0| >= gamma^{M+1}
  const double kmax = std::pow(s.gamma, s.M + 1);
  return static_cast<std::int64_t>(std::ceil(kmax * s.beta / (2.0 * pi))) + 1;
}

}  // namespace

FermiPoint fermi(double mu) {
  if (!(std::abs(mu) < 1.0)) fail(ErrorKind::BandEdge, "|mu| >= 1: no Fermi surface");
  const double pf = std::acos(mu);
  if (std::abs(pf - pi / 2) < 1e-9) fail(ErrorKind::HalfFilling, "pF = pi/2 is excluded");
  return {pf, std::sin(pf)};
}

void LatticeSpec::validate() const {
  if (L <= 0 || L % 2 != 0) fail(ErrorKind::DomainViolation, "L must be even and positive");
  if (!(beta > 0.0)) fail(ErrorKind::DomainViolation, "beta must be positive");
  if (M < 1) fail(ErrorKind::DomainViolation, "M must be at least 1");
  if (!(gamma > 1.0)) fail(ErrorKind::InvalidGamma, "gamma must exceed 1");
  fermi(mu);
}

double LatticeSpec::momentum(int n) const { return 2.0 * pi * n / L; }

double LatticeSpec::matsubara(std::int64_t n) const {
  return 2.0 * pi * (static_cast<double>(n) + 0.5) / beta;
}

double LatticeSpec::delta_M() const { return beta / std::sqrt(static_cast<double>(M)); }

double cutoff_chi(double t, double gamma) {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= gamma) return 0.0;
  const double s = (a - 1.0) / (gamma - 1.0);
  return 1.0 - s * s * s * (10.0 - 15.0 * s + 6.0 * s * s);
}

cplx momentum_propagator(int n, std::int64_t m, const LatticeSpec& s) {
  const double k0 = s.matsubara(m);
  const double chi = cutoff_chi(k0 * std::pow(s.gamma, -s.M), s.gamma);
  return chi / cplx(s.dispersion(s.momentum(n)), -k0);
}

cplx propagator(int x, double x0, const LatticeSpec& s) {
  s.validate();
  if (!(std::abs(x0) < s.beta / 2)) fail(ErrorKind::RangeError, "x0 must lie in (-beta/2, beta/2)");
  const double scale = std::pow(s.gamma, -s.M);
  const double shift = s.delta_M() - x0;
  const std::int64_t span = frequency_span(s);

  std::vector<double> e(static_cast<std::size_t>(s.L));
  std::vector<cplx> phase(static_cast<std::size_t>(s.L));
  for (int n = 0; n < s.L; ++n) {
    e[n] = s.dispersion(s.momentum(n));
    phase[n] = std::polar(1.0, -s.momentum(n) * x);
  }
  lcplx acc = 0;
  for (std::int64_t m = -span; m < span; ++m) {
    const double k0 = s.matsubara(m);
    const double chi = cutoff_chi(k0 * scale, s.gamma);
    if (chi == 0.0) continue;
    cplx inner = 0.0;
    for (int n = 0; n < s.L; ++n) inner += phase[n] / cplx(e[n], -k0);
    acc += lcplx(chi * std::polar(1.0, k0 * shift) * inner);
  }
  return cplx(acc) / (s.beta * s.L);
}

cplx propagator_limit(int x, double x0, const LatticeSpec& s) {
  s.validate();
  double sign = 1.0;
  const double tau = reduce_time(x0, s.beta, sign);
  long double re = 0, im = 0;
  for (int n = 0; n < s.L; ++n) {
    const double k = s.momentum(n);
    const double g = mode_propagator(s.dispersion(k), tau, s.beta);
    re += g * std::cos(k * x);
    im -= g * std::sin(k * x);
  }
  return sign * cplx(static_cast<double>(re), static_cast<double>(im)) / static_cast<double>(s.L);
}

cplx free_asymptotic(double x0, double x1, double pF, double vF) {
  cplx s = 0.0;
  for (int w : {1, -1}) s += std::polar(1.0, -w * pF * x1) / cplx(vF * x0, w * x1);
  return s / (2.0 * pi);
}

double response_C(int x, double x0, const LatticeSpec& s) {
  const bool same_site = (x % s.L) == 0;
  const bool same_time = std::abs(std::remainder(x0, s.beta)) == 0.0;
  if (same_site && same_time) fail(ErrorKind::OriginSingularity, "response at coincident points");
  return (-2.0 * propagator_limit(x, x0, s) * propagator_limit(-x, -x0, s)).real();
}

Bubbles bubbles(int n_p, std::int64_t m_p, const LatticeSpec& s) {
  s.validate();
  const double scale = std::pow(s.gamma, -s.M);
  const std::int64_t span = frequency_span(s);
  const double p = s.momentum(n_p);

  std::vector<double> e(static_cast<std::size_t>(s.L)), ep(static_cast<std::size_t>(s.L));
  std::vector<cplx> vertex(static_cast<std::size_t>(s.L));
  for (int n = 0; n < s.L; ++n) {
    const double k = s.momentum(n);
    e[n] = s.dispersion(k);
    ep[n] = s.dispersion(k + p);
    // J~(k,p) = (e^{i(k+p)} - e^{-ik}) / 2i
    vertex[n] = (std::polar(1.0, k + p) - std::polar(1.0, -k)) / (2.0 * I);
  }
  lcplx qc = 0, qj = 0;
  const std::int64_t lo = std::min(-span, -span - m_p), hi = std::max(span, span - m_p);
  for (std::int64_t m = lo; m < hi; ++m) {
    const double k0 = s.matsubara(m);
    const double k0p = s.matsubara(m + m_p);
    const double chi = cutoff_chi(k0 * scale, s.gamma) * cutoff_chi(k0p * scale, s.gamma);
    if (chi == 0.0) continue;
    cplx c = 0.0, j = 0.0;
    for (int n = 0; n < s.L; ++n) {
      const cplx gg = 1.0 / (cplx(e[n], -k0) * cplx(ep[n], -k0p));
      c += gg;
      j += vertex[n] * gg;
    }
    qc += lcplx(chi * c);
    qj += lcplx(chi * j);
  }
  const double norm = -2.0 / (s.beta * s.L);
  return {norm * cplx(qc), norm * cplx(qj)};
}

Bubbles bubbles_limit(int n_p, std::int64_t m_p, const LatticeSpec& s) {
  s.validate();
  const double p = s.momentum(n_p);
  const double p0 = 2.0 * pi * static_cast<double>(m_p) / s.beta;
  lcplx qc = 0, qj = 0;
  for (int n = 0; n < s.L; ++n) {
    const double k = s.momentum(n);
    const double e1 = s.dispersion(k), e2 = s.dispersion(k + p);
    const cplx den(e2 - e1, -p0);
    cplx w;
    if (std::abs(den) < 1e-12)
      w = -fermi_slope(e1, s.beta);
    else
      w = (fermi_fn(e2, s.beta) - fermi_fn(e1, s.beta)) / den;
    const cplx vtx = (std::polar(1.0, k + p) - std::polar(1.0, -k)) / (2.0 * I);
    qc += lcplx(w);
    qj += lcplx(vtx * w);
  }
  const double norm = -2.0 / s.L;
  return {norm * cplx(qc), norm * cplx(qj)};
}

WardResidual ward_residual(int n_p, std::int64_t m_p, const LatticeSpec& s) {
  if (n_p % s.L == 0 && m_p == 0) fail(ErrorKind::ZeroMomentum, "p = 0");
  WardResidual r;
  r.b = bubbles(n_p, m_p, s);
  const double p = s.momentum(n_p);
  const double p0 = 2.0 * pi * static_cast<double>(m_p) / s.beta;
  const cplx t1 = -I * p0 * r.b.charge;
  const cplx t2 = -I * (1.0 - std::polar(1.0, -p)) * r.b.current;
  r.residual = std::abs(t1 + t2);
  r.scale = std::abs(t1) + std::abs(t2);
  r.relative = r.scale > 0.0 ? r.residual / r.scale : r.residual;
  return r;
}

LatticeSusceptibility susceptibility_lattice(const LatticeSpec& s) {
  s.validate();
  LatticeSusceptibility out;
  out.p_min = s.momentum(1);
  out.at_pmin = bubbles_limit(1, 0, s).charge.real();
  out.at_2pmin = bubbles_limit(2, 0, s).charge.real();
  LatticeSpec fine = s;
  fine.L = 2 * s.L;
  out.at_pmin_2L = bubbles_limit(1, 0, fine).charge.real();
  out.extrapolated = (4.0 * out.at_pmin_2L - out.at_pmin) / 3.0;
  return out;
}

cplx equal_time_extrapolated(int x, const LatticeSpec& spec, std::span<const int> Ms) {
  if (Ms.empty()) fail(ErrorKind::EmptyInput, "no cutoff exponents given");
  std::vector<double> h;
  std::vector<cplx> t;
  for (int m : Ms) {
    LatticeSpec s = spec;
    s.M = m;
    h.push_back(s.delta_M());
    t.push_back(propagator(x, 0.0, s));
  }
  // Neville tableau evaluated at h = 0
  for (std::size_t k = 1; k < t.size(); ++k)
    for (std::size_t i = t.size() - 1; i >= k; --i)
      t[i] = (h[i - k] * t[i] - h[i] * t[i - 1]) / (h[i - k] - h[i]);
  return t.back();
}

double fit_decay_exponent(std::span<const double> r, std::span<const double> y) {
  if (r.size() != y.size() || r.size() < 2) fail(ErrorKind::EmptyInput, "need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double lx = std::log(r[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecayFit response_decay_fit(const LatticeSpec& spec, int x_lo, int x_hi, double min_modulation) {
  const double pf = fermi(spec.mu).pF;
  std::vector<double> r, y;
  for (int x = x_lo; x <= x_hi; ++x) {
    if (1.0 - std::cos(2.0 * pf * x) < min_modulation) continue;
    r.push_back(x);
    y.push_back(response_C(x, 0.0, spec));
  }
  return {fit_decay_exponent(r, y), r.size()};
}

}  // namespace luttflow
