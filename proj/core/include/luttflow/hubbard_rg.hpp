#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "luttflow/scale_flow.hpp"

namespace luttflow {

struct CouplingVector {
  cplx g1{}, g2{}, g4{}, delta{}, nu{};

  bool is_real() const;
  bool finite() const;
  friend bool operator==(const CouplingVector&, const CouplingVector&) = default;
};

struct ModelInputs {
  cplx lambda{};
  double v0 = 1.0;    // v^(0)
  double v2pf = 1.0;  // v^(2 pF)
  double mu = 0.5;
  double gamma = 2.0;

  void validate() const;
  double pF() const;
  double vF() const;
};

// Scale h maps to index d = -h; at(h) hides the flip.
struct HubbardFlowTrace {
  std::vector<CouplingVector> v;
  double a = 0.0;
  std::int64_t j0 = 0;

  std::int64_t h_min() const { return -static_cast<std::int64_t>(v.size()) + 1; }
  const CouplingVector& at(std::int64_t h) const;
};

using BetaNu = std::function<cplx(std::int64_t h)>;
// Additive correction applied after the leading step at scale h.
using Remainder = std::function<CouplingVector(std::int64_t h, const CouplingVector&)>;

struct FlowOptions {
  std::optional<FlowSchedule> schedule;  // default: constant leading coefficient
  BetaNu beta_nu;
  Remainder remainder;
  std::optional<SectorDomain> sector;  // enables the entry check and escape radius
  double nu_escape = 1e6;
  std::int64_t j0 = 0;
};

double leading_coefficient(double v_F, double gamma);
CouplingVector init_couplings(const ModelInputs& in);

HubbardFlowTrace run_flow(const CouplingVector& v0, const ModelInputs& in, std::int64_t h_min,
                          const FlowOptions& opts = {});

struct FixedPoint {
  CouplingVector limit;      // g1 -> 0, g2 and g4 extrapolated to h = -inf
  cplx g1_residual{};        // g1 at h_min
  cplx g2_pred{}, g4_pred{};  // g2,0 - g1,0 / 2 and g4,0
};

FixedPoint fixed_point(const HubbardFlowTrace& trace, const ModelInputs& in);

struct TuneOptions {
  double k_bound = 10.0;
  double theta = 0.5;  // 0 reduces to a plain max_h |nu_h| <= k_bound |lambda| test
};

struct TunedNu {
  cplx nu0{};
  std::vector<cplx> trajectory;  // nu at depth 0..|h_min|
};

TunedNu tune_nu_trajectory(const CouplingVector& v0, const ModelInputs& in, const BetaNu& beta_nu,
                           std::int64_t h_min, const TuneOptions& opts = {});
cplx tune_nu(const CouplingVector& v0, const ModelInputs& in, const BetaNu& beta_nu,
             std::int64_t h_min, const TuneOptions& opts = {});

struct LogSum {
  cplx sum{};
  cplx prediction{};
};

LogSum g1_log_sum(const HubbardFlowTrace& trace, std::int64_t h, std::int64_t j0);
LogSum g2_log_sum(const HubbardFlowTrace& trace, std::int64_t h, std::int64_t j0);

// g2 at h = -inf estimated from the deepest scale (tail of the g1 flow removed)
cplx g2_limit(const HubbardFlowTrace& trace);

}  // namespace luttflow
