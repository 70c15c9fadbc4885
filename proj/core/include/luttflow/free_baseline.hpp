#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include "luttflow/scale_flow.hpp"

namespace luttflow {

struct FermiPoint {
  double pF = 0.0;
  double vF = 0.0;
};

FermiPoint fermi(double mu);

struct LatticeSpec {
  int L = 64;
  double beta = 64.0;
  int M = 12;
  double mu = 0.5;
  double gamma = 2.0;

  void validate() const;
  double momentum(int n) const;          // 2 pi n / L
  double matsubara(std::int64_t n) const;  // 2 pi (n + 1/2) / beta
  double dispersion(double k) const { return mu - std::cos(k); }
  double delta_M() const;                  // beta / sqrt(M)
};

// 1 on |t| <= 1, 0 on |t| >= gamma, quintic smoothstep in between
double cutoff_chi(double t, double gamma);

// chi(gamma^-M k0) / (-i k0 + e_k) at momentum index n, frequency index m
cplx momentum_propagator(int n, std::int64_t m, const LatticeSpec& spec);

// finite-M Matsubara sum including the e^{i k0 delta_M} factor; x0 in (-beta/2, beta/2)
cplx propagator(int x, double x0, const LatticeSpec& spec);
// M -> infinity; x0 = 0 is read as 0^-
cplx propagator_limit(int x, double x0, const LatticeSpec& spec);

// (1/2pi) sum_w e^{-i w pF x} / (vF x0 + i w x)
cplx free_asymptotic(double x0, double x1, double pF, double vF);

// -2 g(x) g(-x), closed-form propagators
double response_C(int x, double x0, const LatticeSpec& spec);

struct Bubbles {
  cplx charge{};   // Omega_C^(p)
  cplx current{};  // Omega_{j,rho}^(p)
};

// p = (2 pi n_p / L, 2 pi m_p / beta); finite-M frequency sums
Bubbles bubbles(int n_p, std::int64_t m_p, const LatticeSpec& spec);
// same quantities from the exact frequency sum (M -> infinity)
Bubbles bubbles_limit(int n_p, std::int64_t m_p, const LatticeSpec& spec);

struct WardResidual {
  double residual = 0.0;  // |-i p0 C - i (1 - e^{-ip}) J|
  double scale = 0.0;     // |p0 C| + |(1 - e^{-ip}) J|
  double relative = 0.0;
  Bubbles b;
};

WardResidual ward_residual(int n_p, std::int64_t m_p, const LatticeSpec& spec);

struct LatticeSusceptibility {
  double p_min = 0.0;
  double at_pmin = 0.0;        // Omega_C^(p_min, 0) at L
  double at_2pmin = 0.0;       // Omega_C^(2 p_min, 0) at L
  double at_pmin_2L = 0.0;     // Omega_C^(p_min / 2, 0) at 2L
  double extrapolated = 0.0;   // Richardson over L (error ~ p^2)
};

LatticeSusceptibility susceptibility_lattice(const LatticeSpec& spec);

// Polynomial extrapolation of the finite-M equal-time propagator g_M(x, 0) to
// delta_M -> 0 (Neville); the limit is g(x, 0^-).
cplx equal_time_extrapolated(int x, const LatticeSpec& spec, std::span<const int> Ms);

// least-squares slope of log|y| against log r, sign flipped (y ~ r^-exponent)
double fit_decay_exponent(std::span<const double> r, std::span<const double> y);

struct DecayFit {
  double exponent = 0.0;
  std::size_t points = 0;
};

// Omega_C on the space axis over [x_lo, x_hi], keeping only sites where the
// 2 pF oscillation factor 1 - cos(2 pF x) is at least `min_modulation`
DecayFit response_decay_fit(const LatticeSpec& spec, int x_lo, int x_hi, double min_modulation = 0.5);

}  // namespace luttflow
