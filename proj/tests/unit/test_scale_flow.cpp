#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "luttflow/error.hpp"
#include "luttflow/scale_flow.hpp"

using namespace luttflow;
using std::numbers::pi;

namespace {

// independent extended-precision iteration of the same map
std::complex<long double> long_iterate(cplx g0, long double a, std::int64_t n) {
  std::complex<long double> g(g0.real(), g0.imag());
  for (std::int64_t k = 0; k < n; ++k) g -= a * g * g;
  return g;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ConfigError;
}

}  // namespace

TEST(StepG1, Examples) {
  EXPECT_DOUBLE_EQ(step_g1(0.1, 0.25).real(), 0.0975);
  EXPECT_EQ(step_g1(0.0, 0.7), cplx(0.0));
  const cplx r = step_g1({0.1, 0.1}, 0.2);
  EXPECT_NEAR(r.real(), 0.1, 1e-15);
  EXPECT_NEAR(r.imag(), 0.096, 1e-15);
}

TEST(TildeG, Examples) {
  EXPECT_NEAR(tilde_g(0.1, 0.2, 10).real(), 0.1 / 1.2, 1e-15);
  EXPECT_EQ(tilde_g({0.3, -0.2}, {7.0, 1.0}, 0), cplx(0.3, -0.2));
  EXPECT_NEAR(tilde_g(0.05, 0.22064, 1000).real(), 0.0041556, 5e-8);
}

TEST(TildeG, DegenerateDenominator) {
  // 1 + g0 n A = 0 at g0 = -1, n = 1, A = 1
  EXPECT_EQ(kind_of([] { tilde_g(-1.0, 1.0, 1); }), ErrorKind::DegenerateDenominator);
}

TEST(Sector, Membership) {
  const SectorDomain d{0.01, pi / 4};
  EXPECT_TRUE(in_sector(0.005, d));
  EXPECT_FALSE(in_sector(-0.005, d));
  EXPECT_FALSE(in_sector(0.02, d));
  EXPECT_TRUE(in_sector(0.0, d));
  EXPECT_TRUE(in_sector(std::polar(0.009, 0.74 * pi), d));
  EXPECT_FALSE(in_sector(std::polar(0.009, 0.76 * pi), d));
}

TEST(Sector, ArgConvention) {
  EXPECT_DOUBLE_EQ(arg_principal(-1.0), pi);
  EXPECT_DOUBLE_EQ(arg_principal(0.0), 0.0);
  EXPECT_DOUBLE_EQ(arg_principal(cplx(-1.0, -0.0)), pi);
  const cplx s = principal_sqrt(-4.0);
  EXPECT_NEAR(s.real(), 0.0, 1e-15);
  EXPECT_NEAR(s.imag(), 2.0, 1e-15);
}

TEST(Sector, Validation) {
  EXPECT_EQ(kind_of([] { SectorDomain{0.0, 0.5}.validate(); }), ErrorKind::DomainViolation);
  EXPECT_EQ(kind_of([] { SectorDomain{0.1, pi / 2}.validate(); }), ErrorKind::DomainViolation);
  const SectorDomain d{0.01, pi / 4};
  EXPECT_NEAR(d.iterate_hull().epsilon, 0.03 / std::sin(pi / 4), 1e-15);
  EXPECT_NEAR(d.iterate_hull().delta, pi / 16, 1e-15);
  EXPECT_NEAR(d.approximant_hull().epsilon, 0.02 / std::sin(pi / 4), 1e-15);
  EXPECT_NEAR(d.escape_radius(), 10 * d.iterate_hull().epsilon, 1e-15);
}

TEST(AverageCoefficients, Examples) {
  const std::vector<cplx> c = {0.2, 0.2, 0.2};
  for (cplx a : average_coefficients(c)) EXPECT_NEAR(a.real(), 0.2, 1e-16);
  const std::vector<cplx> r = {0.1, 0.3};
  const auto A = average_coefficients(r);
  EXPECT_NEAR(A[0].real(), 0.1, 1e-16);
  EXPECT_NEAR(A[1].real(), 0.2, 1e-16);
  const std::vector<cplx> z = {0.2, {0.2, 0.01}};
  const auto B = average_coefficients(z);
  EXPECT_NEAR(B[1].imag(), 0.005, 1e-16);
  EXPECT_EQ(kind_of([] { average_coefficients({}); }), ErrorKind::EmptyInput);
}

TEST(RunG1Flow, MatchesLongDoubleIteration) {
  const auto sched = FlowSchedule::constant(0.22064);
  const G1Trace t = run_g1_flow(0.01, sched, 10000);
  ASSERT_EQ(t.g.size(), 10001u);
  const auto ref = long_iterate(0.01, 0.22064L, 10000);
  EXPECT_NEAR(t.g.back().real(), static_cast<double>(ref.real()), 1e-13 * std::abs(t.g.back()));
  const double gt = std::abs(t.g_tilde.back());
  EXPECT_LE(std::abs(t.g.back() - t.g_tilde.back()), std::pow(gt, 1.5));
}

TEST(RunG1Flow, ConstantScheduleGivesExactApproximant) {
  const double a = 0.3;
  const cplx g0{0.004, 0.002};
  const G1Trace t = run_g1_flow(g0, FlowSchedule::constant(a), 500);
  ASSERT_EQ(t.g.size(), t.g_tilde.size());
  EXPECT_EQ(t.g[0], t.g_tilde[0]);
  for (std::size_t n = 1; n < t.A.size(); ++n) {
    EXPECT_NEAR(std::abs(t.A[n] - a), 0.0, 1e-15);
    const cplx exact = g0 / (1.0 + a * g0 * static_cast<double>(n));
    EXPECT_NEAR(std::abs(t.g_tilde[n] - exact), 0.0, 1e-17);
  }
}

TEST(RunG1Flow, RotatedStartStaysInHull) {
  const SectorDomain d{0.01, pi / 4};
  const cplx g0 = std::polar(0.005, 2 * pi / 3);
  const G1BoundReport r = check_g1_bounds(g0, FlowSchedule::constant(0.22064), 100000, d);
  EXPECT_TRUE(r.iterates_in_hull);
  EXPECT_TRUE(r.approximants_in_hull);
  EXPECT_LE(r.max_bound_ratio, 1.0);
}

TEST(RunG1Flow, ZeroStaysZero) {
  FlowSchedule s{0.7, [](std::int64_t) { return cplx(0.0); }, 0.0};
  const G1Trace t = run_g1_flow(0.0, s, 5);
  for (cplx g : t.g) EXPECT_EQ(g, cplx(0.0));
}

TEST(RunG1Flow, PerturbationBoundEnforced) {
  FlowSchedule s{0.2, [](std::int64_t) { return cplx(0.01); }, 0.5};
  // |sigma| = 0.01 > 0.5 * 0.001
  EXPECT_EQ(kind_of([&] { run_g1_flow(0.001, s, 10); }), ErrorKind::PerturbationBoundViolated);
}

TEST(RunG1Flow, DivergenceOutsideBasin) {
  // negative real start runs away
  EXPECT_EQ(kind_of([] { run_g1_flow(-0.01, FlowSchedule::constant(0.3), 100000, 1.0); }),
            ErrorKind::Divergence);
}

TEST(RunG1Flow, MonotoneOnPositiveAxis) {
  const G1Trace t = run_g1_flow(0.008, FlowSchedule::constant(0.25), 20000);
  for (std::size_t n = 1; n < t.g.size(); ++n) {
    ASSERT_GT(t.g[n].real(), 0.0);
    ASSERT_LT(t.g[n].real(), t.g[n - 1].real());
  }
}

TEST(RunG1Flow, InverseLinearAsymptotics) {
  const double a = 0.22064, g0 = 0.01;
  const std::int64_t n = 10'000'000;
  const cplx g = iterate_g1(g0, FlowSchedule::constant(a), n);
  EXPECT_NEAR(a * static_cast<double>(n) * g.real(), 1.0, 0.01);
}

TEST(RunG1Flow, RandomStartsAndPerturbationsRespectBound) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const SectorDomain d{0.01, pi / 4};
  for (int trial = 0; trial < 20; ++trial) {
    const cplx g0 = std::polar(0.01 * std::sqrt(u(rng)), (2 * u(rng) - 1) * (pi - pi / 4) * 0.999);
    std::vector<cplx> sig(20000);
    for (auto& s : sig) s = std::polar(std::abs(g0) * u(rng), 2 * pi * u(rng));
    FlowSchedule f{0.22064, [&](std::int64_t k) { return sig[static_cast<std::size_t>(k)]; }, 1.0};
    const G1BoundReport r = check_g1_bounds(g0, f, 20000, d);
    EXPECT_LE(r.max_bound_ratio, 1.0) << "g0 = " << g0;
    EXPECT_TRUE(r.iterates_in_hull) << "g0 = " << g0;
  }
}
