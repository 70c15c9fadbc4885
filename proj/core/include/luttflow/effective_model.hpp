#pragma once

#include <complex>
#include <map>
#include <string_view>

#include "luttflow/scale_flow.hpp"

namespace luttflow {

struct EffectiveParams {
  double g_par = 0.0;
  double g_perp = 0.0;
  double g4 = 0.0;
  double c = 1.0;
  double Z = 1.0;

  void validate() const;
};

struct Anomalies {
  double nu_rho = 0.0;
  double nu_sigma = 0.0;
  double nu4 = 0.0;
};

struct ChannelVelocities {
  double v_plus = 1.0;
  double v_minus = 1.0;
  double v = 1.0;  // v_minus / v_plus
};

enum class CorrTag { C2, S2, SC2, TC2, SC1, C1, S1 };
std::string_view to_string(CorrTag t);

struct EtaZeta {
  double eta = 0.0;
  double zeta = 0.0;
};

struct KPair {
  double K = 1.0;
  double K_tilde = 1.0;
};

struct ExponentSet {
  double eta_rho = 0.0, eta_sigma = 0.0;
  double zeta_rho = 0.0, zeta_sigma = 0.0;
  ChannelVelocities rho, sigma;
  double K = 1.0, K_tilde = 1.0;
  std::map<CorrTag, double> X2;  // 2 X_t
};

Anomalies anomaly_params(const EffectiveParams& p);
ChannelVelocities channel_velocities(double nu_gamma, double nu4_gamma);
EtaZeta eta_zeta(const ChannelVelocities& vel, double nu_gamma);
KPair K_pair(double nu_rho, double nu4);
// the double square-root factorization of K
double K_sqrt_form(double nu_rho, double nu4);
std::map<CorrTag, double> X_table(double eta_rho, double zeta_rho);
ExponentSet exponents(const Anomalies& an);

// rho uses nu4, sigma uses -nu4
ChannelVelocities rho_velocities(const Anomalies& an);
ChannelVelocities sigma_velocities(const Anomalies& an);

// leading term of S_omega(x); x0 time, x1 space
cplx two_point(double x0, double x1, const EffectiveParams& p, const Anomalies& an, int omega);

enum class DensityChannel { Rho, Sigma };

// large-|x| G^gamma_{omega', omega}(x)
cplx density_correlation(double x0, double x1, const EffectiveParams& p, const Anomalies& an,
                         DensityChannel ch, int omega_prime, int omega);
// <O(1,C) O(1,C)> for Rho, <O(1,S3) O(1,S3)> for Sigma
double density_pair_correlation(double x0, double x1, const EffectiveParams& p,
                                const Anomalies& an, DensityChannel ch);

// Hubbard-matched anomalies at leading order, c = sin pF_bar
Anomalies tune_to_hubbard(double lambda, double v0, double v2pf, double pF_bar);

}  // namespace luttflow
