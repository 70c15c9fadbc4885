#pragma once

#include "luttflow/effective_model.hpp"

namespace luttflow {

struct BarredParams {
  double g1_bar = 0.0, g2_bar = 0.0, g4_bar = 0.0, delta_bar = 0.0;
  double c_bar = 1.0;  // v_F (1 + delta_bar)
};

struct BarredAnomalies {
  double nu_rho_bar = 0.0;
  double nu4_bar = 0.0;
};

struct ObservableSet {
  double K_bar = 1.0;
  double v_rho_bar = 1.0;
  double kappa = 0.0;
  double drude = 0.0;
  double v = 1.0;  // c_bar * v_rho_bar
};

BarredParams barred_couplings(double lambda, double v0, double v2pf, double v_F,
                              double delta_bar = 0.0);
BarredAnomalies barred_anomalies(const BarredParams& p);
double K_bar(double nu_rho_bar, double nu4_bar);
// the double square-root factorization, for cross-checks
double K_bar_sqrt_form(double nu_rho_bar, double nu4_bar);
double v_rho_bar(const BarredAnomalies& an);

ObservableSet susceptibility_drude(double K_bar, double c_bar, double v_rho_bar);

// leading small-p forms; p0 frequency, p1 momentum
double omega_C_hat(double p0, double p1, const ObservableSet& obs);
double drude_hat(double p0, double p1, const ObservableSet& obs);

// whole chain for a Hubbard point at leading order
ObservableSet hubbard_observables(double lambda, double v0, double v2pf, double pF_bar,
                                  double delta_bar = 0.0);

}  // namespace luttflow
