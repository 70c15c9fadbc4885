#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace luttflow {

using cplx = std::complex<double>;

// {|z| < epsilon, |Arg z| < pi - delta}
struct SectorDomain {
  double epsilon = 0.01;
  double delta = 0.7853981633974483;

  void validate() const;
  // the enlarged sectors that hold the exact and approximate iterates
  SectorDomain iterate_hull() const;      // (3 eps / sin delta, delta / 4)
  SectorDomain approximant_hull() const;  // (2 eps / sin delta, delta / 2)
  double escape_radius() const;           // 10 * radius of iterate_hull()
};

// a_n = a + sigma(n)
struct FlowSchedule {
  double a = 0.0;
  std::function<cplx(std::int64_t)> sigma;  // empty means sigma == 0
  double c0 = 0.0;

  static FlowSchedule constant(double a) { return FlowSchedule{a, {}, 0.0}; }
  cplx coefficient(std::int64_t n) const { return sigma ? a + sigma(n) : cplx(a); }
};

struct G1Trace {
  std::vector<cplx> g;
  std::vector<cplx> g_tilde;
  std::vector<cplx> A;  // A[0] is unused and set to a_0 for convenience
};

inline constexpr double kDenominatorTolerance = 1e-12;

cplx step_g1(cplx g, cplx a_n);
cplx tilde_g(cplx g0, cplx A_n, std::int64_t n, double tolerance = kDenominatorTolerance);
bool in_sector(cplx z, const SectorDomain& domain);

// Arg in (-pi, pi], Arg(0) = 0
double arg_principal(cplx z);
// |z|^{1/2} e^{i Arg(z)/2}
cplx principal_sqrt(cplx z);

std::vector<cplx> average_coefficients(std::span<const cplx> a_seq);

G1Trace run_g1_flow(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                    double escape_radius = std::numeric_limits<double>::infinity());

// Streams the flow without storing it and collects the quantities the
// approximation bounds talk about.
struct G1BoundReport {
  std::int64_t steps = 0;
  double max_bound_ratio = 0.0;  // max_n |g_n - g~_n| / |g~_n|^{3/2}
  bool iterates_in_hull = true;
  bool approximants_in_hull = true;
  bool monotone_real = true;  // only meaningful for real positive g0
  cplx g_final{};
  cplx g_tilde_final{};
};

G1BoundReport check_g1_bounds(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                              const SectorDomain& domain);

// Final iterate only; constant memory.
cplx iterate_g1(cplx g0, const FlowSchedule& schedule, std::int64_t n_steps,
                double escape_radius = std::numeric_limits<double>::infinity());

}  // namespace luttflow
