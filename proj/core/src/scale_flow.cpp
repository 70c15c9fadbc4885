#include "luttflow/scale_flow.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "luttflow/error.hpp"

namespace luttflow {

namespace {

void check_sigma(const FlowSchedule& s, std::int64_t n, cplx g0) {
  if (!s.sigma) return;
  const double mag = std::abs(s.sigma(n));
  if (mag > s.c0 * std::abs(g0) * (1.0 + 1e-12))
    fail(ErrorKind::PerturbationBoundViolated,
         "|sigma_" + std::to_string(n) + "| = " + std::to_string(mag) + " exceeds c0|g0|");
}

void check_escape(cplx g, std::int64_t n, double radius) {
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag()) || std::abs(g) > radius)
    fail(ErrorKind::Divergence, "|g_" + std::to_string(n) + "| left the escape radius");
}

}  // namespace

void SectorDomain::validate() const {
  if (!(epsilon > 0.0)) fail(ErrorKind::DomainViolation, "sector epsilon must be positive");
  if (!(delta > 0.0 && delta < std::numbers::pi / 2))
    fail(ErrorKind::DomainViolation, "sector delta must lie in (0, pi/2)");
}

SectorDomain SectorDomain::iterate_hull() const {
  return {3.0 * epsilon / std::sin(delta), delta / 4.0};
}

SectorDomain SectorDomain::approximant_hull() const {
  return {2.0 * epsilon / std::sin(delta), delta / 2.0};
}

double SectorDomain::escape_radius() const { return 10.0 * iterate_hull().epsilon; }

cplx step_g1(cplx g, cplx a_n) { return g - a_n * g * g; }

cplx tilde_g(cplx g0, cplx A_n, std::int64_t n, double tolerance) {
  const cplx den = 1.0 + g0 * static_cast<double>(n) * A_n;
  if (std::abs(den) <= tolerance)
    fail(ErrorKind::DegenerateDenominator, "|1 + g0 n A_n| below tolerance");
  return g0 / den;
}

double arg_principal(cplx z) {
  if (z == cplx(0.0, 0.0)) return 0.0;
  // std::arg gives -pi for (-x, -0.0); fold it onto +pi
  const double t = std::arg(z);
  return t <= -std::numbers::pi ? std::numbers::pi : t;
}

cplx principal_sqrt(cplx z) {
  return std::polar(std::sqrt(std::abs(z)), 0.5 * arg_principal(z));
}

bool in_sector(cplx z, const SectorDomain& d) {
  return std::abs(z) < d.epsilon && std::abs(arg_principal(z)) < std::numbers::pi - d.delta;
}

std::vector<cplx> average_coefficients(std::span<const cplx> a_seq) {
  if (a_seq.empty()) fail(ErrorKind::EmptyInput, "coefficient sequence is empty");
  std::vector<cplx> out;
  out.reserve(a_seq.size());
  std::complex<long double> sum = 0;
  for (std::size_t k = 0; k < a_seq.size(); ++k) {
    sum += std::complex<long double>(a_seq[k]);
    out.push_back(cplx(sum / static_cast<long double>(k + 1)));
  }
  return out;
}

G1Trace run_g1_flow(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                    double escape_radius) {
  if (n_steps <= 0) fail(ErrorKind::RangeError, "n_steps must be positive");
  G1Trace t;
  const auto len = static_cast<std::size_t>(n_steps) + 1;
  t.g.resize(len);
  t.g_tilde.resize(len);
  t.A.resize(len);
  t.g[0] = g0;
  t.g_tilde[0] = g0;
  t.A[0] = schedule.coefficient(0);

  std::complex<long double> sum = 0;
  cplx g = g0;
  for (std::int64_t n = 0; n < n_steps; ++n) {
    check_sigma(schedule, n, g0);
    const cplx a_n = schedule.coefficient(n);
    sum += std::complex<long double>(a_n);
    g = step_g1(g, a_n);
    check_escape(g, n + 1, escape_radius);
    const auto i = static_cast<std::size_t>(n + 1);
    t.g[i] = g;
    t.A[i] = cplx(sum / static_cast<long double>(n + 1));
    t.g_tilde[i] = tilde_g(g0, t.A[i], n + 1);
  }
  return t;
}

cplx iterate_g1(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                double escape_radius) {
  cplx g = g0;
  for (std::int64_t n = 0; n < n_steps; ++n) {
    check_sigma(schedule, n, g0);
    g = step_g1(g, schedule.coefficient(n));
    check_escape(g, n + 1, escape_radius);
  }
  return g;
}

G1BoundReport check_g1_bounds(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                              const SectorDomain& domain) {
  domain.validate();
  const SectorDomain outer = domain.iterate_hull();
  const SectorDomain approx = domain.approximant_hull();
  const double radius = domain.escape_radius();

  G1BoundReport r;
  r.steps = n_steps;
  std::complex<long double> sum = 0;
  cplx g = g0;
  cplx gt = g0;
  const bool real_pos = g0.imag() == 0.0 && g0.real() > 0.0;
  r.iterates_in_hull = in_sector(g0, outer);
  r.approximants_in_hull = in_sector(g0, approx);
  for (std::int64_t n = 0; n < n_steps; ++n) {
    check_sigma(schedule, n, g0);
    const cplx a_n = schedule.coefficient(n);
    sum += std::complex<long double>(a_n);
    const cplx next = step_g1(g, a_n);
    check_escape(next, n + 1, radius);
    if (real_pos && !(next.real() < g.real() && next.real() > 0.0)) r.monotone_real = false;
    g = next;
    gt = tilde_g(g0, cplx(sum / static_cast<long double>(n + 1)), n + 1);
    const double scale = std::pow(std::abs(gt), 1.5);
    if (scale > 0.0) r.max_bound_ratio = std::max(r.max_bound_ratio, std::abs(g - gt) / scale);
    r.iterates_in_hull = r.iterates_in_hull && in_sector(g, outer);
    r.approximants_in_hull = r.approximants_in_hull && in_sector(gt, approx);
  }
  if (!real_pos) r.monotone_real = false;
  r.g_final = g;
  r.g_tilde_final = gt;
  return r;
}

}  // namespace luttflow
