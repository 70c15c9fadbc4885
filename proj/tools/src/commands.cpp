#include "luttflow/commands.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <thread>

#include "luttflow/correlations.hpp"
#include "luttflow/effective_model.hpp"
#include "luttflow/free_baseline.hpp"
#include "luttflow/hubbard_rg.hpp"
#include "luttflow/observables.hpp"
#include "luttflow/renorm_flow.hpp"

#ifndef LUTTFLOW_VERSION
#define LUTTFLOW_VERSION "0.0.0"
#endif

namespace luttflow::cli {

using nlohmann::ordered_json;

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ModelInputs read_model(const Config& c, double lambda) {
  ModelInputs in;
  in.lambda = cplx(lambda, c.number("model.lambda_im", 0.0));
  in.mu = c.number("model.mu", 0.5);
  in.v0 = c.number("model.v0", 1.0);
  in.v2pf = c.number("model.v2pf", 1.0);
  in.gamma = c.number("model.gamma", 2.0);
  in.validate();
  return in;
}

ModelInputs read_model(const Config& c) { return read_model(c, c.number("model.lambda", 0.01)); }

SectorDomain read_sector(const Config& c) {
  SectorDomain d{c.number("sector.epsilon", 0.1), c.number("sector.delta", std::numbers::pi / 4)};
  d.validate();
  return d;
}

void require_in_sector(cplx lambda, const SectorDomain& d) {
  if (!in_sector(lambda, d))
    fail(ErrorKind::DomainViolation,
         "lambda = (" + format_double(lambda.real()) + ", " + format_double(lambda.imag()) +
             ") lies outside the sector D(epsilon = " + format_double(d.epsilon) +
             ", delta = " + format_double(d.delta) + ")");
}

LatticeSpec read_lattice(const Config& c) {
  LatticeSpec s;
  s.L = static_cast<int>(c.integer("lattice.L", 256));
  s.beta = c.number("lattice.beta", 256.0);
  s.M = static_cast<int>(c.integer("lattice.M", 12));
  s.gamma = c.number("lattice.gamma", 2.0);
  s.mu = c.number("model.mu", 0.5);
  s.validate();
  return s;
}

std::vector<double> lambda_grid(const Config& c) {
  if (c.has("model.lambda_grid")) return c.grid("model.lambda_grid", {});
  return {c.number("model.lambda", 0.01)};
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

// Random admissible perturbations: |sigma_n| < c0 |g1,0|, reproducible from the seed.
// Real couplings get real perturbations so the flow stays real.
std::optional<FlowSchedule> random_schedule(double a, double c0, cplx g10, std::int64_t depth,
                                            std::uint64_t seed) {
  if (!(c0 > 0.0)) return std::nullopt;
  auto sig = std::make_shared<std::vector<cplx>>(static_cast<std::size_t>(depth));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double radius = c0 * std::abs(g10) * (1.0 - 1e-9);
  const bool real = g10.imag() == 0.0;
  for (auto& s : *sig)
    s = real ? cplx(radius * (2.0 * u(rng) - 1.0))
             : std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
  FlowSchedule f;
  f.a = a;
  f.c0 = c0;
  f.sigma = [sig](std::int64_t n) {
    return n >= 0 && static_cast<std::size_t>(n) < sig->size() ? (*sig)[static_cast<std::size_t>(n)]
                                                                : cplx{};
  };
  return f;
}

struct ExponentRecord {
  ModelInputs in;
  Anomalies an;
  ExponentSet ex;
  ObservableSet obs;
};

ExponentRecord exponent_record(const ModelInputs& in) {
  ExponentRecord r;
  r.in = in;
  const double lam = in.lambda.real();
  r.an = tune_to_hubbard(lam, in.v0, in.v2pf, in.pF());
  r.ex = exponents(r.an);
  r.obs = hubbard_observables(lam, in.v0, in.v2pf, in.pF());
  return r;
}

ordered_json exponent_json(const ExponentRecord& r) {
  ordered_json x2 = ordered_json::object();
  for (const auto& [tag, v] : r.ex.X2) x2[std::string(to_string(tag))] = v;
  ordered_json j;
  j["lambda"] = r.in.lambda.real();
  j["mu"] = r.in.mu;
  j["v0"] = r.in.v0;
  j["v2pf"] = r.in.v2pf;
  j["nu_rho"] = r.an.nu_rho;
  j["nu_sigma"] = r.an.nu_sigma;
  j["nu4"] = r.an.nu4;
  j["eta_rho"] = r.ex.eta_rho;
  j["eta_sigma"] = r.ex.eta_sigma;
  j["zeta_rho"] = r.ex.zeta_rho;
  j["zeta_sigma"] = r.ex.zeta_sigma;
  j["v_rho"] = r.ex.rho.v;
  j["v_sigma"] = r.ex.sigma.v;
  j["K"] = r.ex.K;
  j["K_tilde"] = r.ex.K_tilde;
  j["X2"] = x2;
  j["K_bar"] = r.obs.K_bar;
  j["v_rho_bar"] = r.obs.v_rho_bar;
  j["kappa"] = r.obs.kappa;
  j["drude"] = r.obs.drude;
  j["v"] = r.obs.v;
  j["residuals"] = {
      {"K_K_tilde_minus_1", r.ex.K * r.ex.K_tilde - 1.0},
      {"four_eta_minus_K_sum", 4.0 * r.ex.eta_rho - (r.ex.K + r.ex.K_tilde - 2.0)},
      {"v2_minus_D_over_kappa", r.obs.v * r.obs.v - r.obs.drude / r.obs.kappa}};
  return j;
}

// Runs fn(i) for i in [0, n) on `threads` workers; results land by index.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"flow", "exponents", "correlations", "baseline",
                                                 "sweep"};
  return names;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model.lambda", "model.lambda_im", "model.lambda_grid", "model.mu", "model.v0",
      "model.v2pf", "model.gamma",
      "flow.h_min", "flow.j0", "flow.sigma_c0", "flow.csv_stride",
      "sector.epsilon", "sector.delta",
      "lattice.L", "lattice.beta", "lattice.M", "lattice.gamma", "lattice.x_max",
      "lattice.ward_n", "lattice.ward_m",
      "correlations.axis", "correlations.r", "correlations.zeta_tilde_sc",
      "sweep.lambda", "sweep.mu", "sweep.v0", "sweep.v2pf", "sweep.h_min",
      "output.dir"};
  return keys;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::DomainViolation:
    case ErrorKind::InvalidGamma:
    case ErrorKind::InvalidVelocity:
    case ErrorKind::BandEdge:
    case ErrorKind::HalfFilling:
    case ErrorKind::RangeError:
    case ErrorKind::EmptyInput:
      return 2;
    default:
      return 1;
  }
}

void cmd_flow(const RunOptions& opt, OutputSet& out) {
  const Config& c = opt.config;
  const ModelInputs in = read_model(c);
  const SectorDomain sector = read_sector(c);
  require_in_sector(in.lambda, sector);
  const std::int64_t h_min = c.integer("flow.h_min", -10000);
  const std::int64_t j0 = c.integer("flow.j0", 0);
  const std::int64_t stride = c.integer("flow.csv_stride", 1);
  if (h_min >= 0) fail(ErrorKind::ConfigError, "key 'flow.h_min' must be negative");
  if (j0 > 0 || j0 < h_min) fail(ErrorKind::ConfigError, "key 'flow.j0' must lie in [h_min, 0]");
  if (stride < 1) fail(ErrorKind::ConfigError, "key 'flow.csv_stride' must be positive");

  const CouplingVector v0 = init_couplings(in);
  FlowOptions fo;
  fo.sector = sector;
  fo.j0 = j0;
  const double a = leading_coefficient(in.vF(), in.gamma);
  fo.schedule = random_schedule(a, c.number("flow.sigma_c0", 0.0), v0.g1, -h_min, opt.seed);
  const HubbardFlowTrace tr = run_flow(v0, in, h_min, fo);

  const bool real = in.lambda.imag() == 0.0;
  std::optional<RenormTrace> rn;
  if (real) rn = run_renorm(tr);

  std::vector<std::string> header = {"h"};
  for (const char* n : {"g1", "g2", "g4", "delta", "nu"}) complex_columns(header, n);
  for (RenormChannel ch : kRenormChannels) header.push_back("zhat_" + std::string(to_string(ch)));
  for (RenormChannel ch : kRenormChannels) header.push_back("q_" + std::string(to_string(ch)));
  CsvTable csv(header);
  for (std::int64_t h = 0; h >= h_min; --h) {
    if ((-h) % stride != 0 && h != h_min) continue;
    const CouplingVector& v = tr.at(h);
    csv.row().add(static_cast<long long>(h)).add(v.g1).add(v.g2).add(v.g4).add(v.delta).add(v.nu);
    for (RenormChannel ch : kRenormChannels) csv.add(rn ? rn->at(ch, h) : nan_v);
    for (RenormChannel ch : kRenormChannels) {
      double q = nan_v;
      if (rn && h < 0 && v0.g1.real() > 0.0) q = q_coefficient(ch, *rn, h, v0.g1, tr.a);
      csv.add(q);
    }
  }
  out.write("flow.csv", csv.render());

  ordered_json s;
  s["a"] = tr.a;
  s["h_min"] = h_min;
  s["j0"] = j0;
  s["initial"] = {{"g1", complex_json(v0.g1)}, {"g2", complex_json(v0.g2)}, {"g4", complex_json(v0.g4)}};
  const CouplingVector& deep = tr.at(h_min);
  s["deepest"] = {{"g1", complex_json(deep.g1)}, {"g2", complex_json(deep.g2)}, {"g4", complex_json(deep.g4)}};
  s["g2_inf"] = complex_json(g2_limit(tr));
  s["g2_inf_pred"] = complex_json(v0.g2 - 0.5 * v0.g1);
  s["converged"] = std::abs(v0.g1) == 0.0 || std::abs(deep.g1) < 0.01 * std::abs(v0.g1);
  const LogSum l1 = g1_log_sum(tr, h_min, j0);
  const LogSum l2 = g2_log_sum(tr, h_min, j0);
  s["g1_log_sum"] = {{"sum", complex_json(l1.sum)}, {"prediction", complex_json(l1.prediction)}};
  s["g2_log_sum"] = {{"sum", complex_json(l2.sum)}, {"prediction", complex_json(l2.prediction)}};
  ordered_json eta = ordered_json::object();
  for (RenormChannel ch : kRenormChannels)
    eta[std::string(to_string(ch))] = complex_json(anomalous_exponent(ch, g2_limit(tr), in.vF()));
  s["eta_leading"] = eta;
  s["perturbed_schedule"] = fo.schedule.has_value();
  out.write("flow_summary.json", s.dump(2) + "\n");
}

void cmd_exponents(const RunOptions& opt, OutputSet& out) {
  const Config& c = opt.config;
  const auto grid = lambda_grid(c);
  std::vector<ExponentRecord> recs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) recs[i] = exponent_record(read_model(c, grid[i]));

  ordered_json arr = ordered_json::array();
  CsvTable csv({"index", "lambda", "nu_rho", "nu4", "eta_rho", "eta_sigma", "zeta_rho", "v_rho",
                "v_sigma", "K", "K_tilde", "X2_2C", "X2_2SC", "X2_1SC", "K_bar", "kappa", "drude",
                "v", "res_KKt", "res_eta", "res_v2"});
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    arr.push_back(exponent_json(r));
    csv.row()
        .add(static_cast<long long>(i))
        .add(r.in.lambda.real())
        .add(r.an.nu_rho)
        .add(r.an.nu4)
        .add(r.ex.eta_rho)
        .add(r.ex.eta_sigma)
        .add(r.ex.zeta_rho)
        .add(r.ex.rho.v)
        .add(r.ex.sigma.v)
        .add(r.ex.K)
        .add(r.ex.K_tilde)
        .add(r.ex.X2.at(CorrTag::C2))
        .add(r.ex.X2.at(CorrTag::SC2))
        .add(r.ex.X2.at(CorrTag::SC1))
        .add(r.obs.K_bar)
        .add(r.obs.kappa)
        .add(r.obs.drude)
        .add(r.obs.v)
        .add(r.ex.K * r.ex.K_tilde - 1.0)
        .add(4.0 * r.ex.eta_rho - (r.ex.K + r.ex.K_tilde - 2.0))
        .add(r.obs.v * r.obs.v - r.obs.drude / r.obs.kappa);
  }
  out.write("exponents.json", ordered_json{{"records", arr}}.dump(2) + "\n");
  out.write("exponents.csv", csv.render());
}

void cmd_correlations(const RunOptions& opt, OutputSet& out) {
  const Config& c = opt.config;
  const ModelInputs in = read_model(c);
  if (in.lambda.imag() != 0.0)
    fail(ErrorKind::DomainViolation, "correlations need a real lambda");
  const AsymptoticContext ctx = make_context(in.lambda.real(), in.v0, in.v2pf, in.pF(),
                                             c.number("correlations.zeta_tilde_sc", 0.0));
  const std::string axis = c.text("correlations.axis", "space");
  if (axis != "space" && axis != "time" && axis != "diagonal")
    fail(ErrorKind::ConfigError, "key 'correlations.axis' must be space, time or diagonal");
  const auto rs = c.grid("correlations.r", parse_grid("correlations.r", "1:100:100"));

  CsvTable csv({"channel", "x0", "x1", "abs_x", "re_value", "im_value"});
  for (double r : rs) {
    const double x0 = axis == "space" ? 0.0 : (axis == "time" ? r : r / std::sqrt(2.0));
    const double x1 = axis == "time" ? 0.0 : (axis == "space" ? r : r / std::sqrt(2.0));
    const double absx = std::hypot(x0, x1);
    auto put = [&](const std::string& ch, cplx v) {
      csv.row().add(ch).add(x0).add(x1).add(absx).add(v);
    };
    put("L", log_factor(x0, x1, ctx));
    for (ResponseChannel a : {ResponseChannel::C, ResponseChannel::S, ResponseChannel::SC,
                              ResponseChannel::TC})
      put(std::string(to_string(a)), omega_asymptotic(a, x0, x1, ctx));
    put("S2", s2_asymptotic(x0, x1, ctx));
    put("SM+", spin_charge_two_point(x0, x1, ctx, +1));
    put("SM-", spin_charge_two_point(x0, x1, ctx, -1));
  }
  out.write("correlations.csv", csv.render());

  ordered_json s;
  s["K"] = ctx.K;
  s["eta"] = ctx.eta;
  s["b"] = ctx.b;
  s["v_rho"] = ctx.v_rho;
  s["v_sigma"] = ctx.v_sigma;
  s["zeta_tilde_sc"] = ctx.zeta_tilde_sc;
  ordered_json x2 = ordered_json::object();
  for (ResponseChannel a : {ResponseChannel::C, ResponseChannel::S, ResponseChannel::SC,
                            ResponseChannel::TC})
    x2[std::string(to_string(a))] = {{"X2", ctx.X2(a)}, {"zeta_bar", zeta_bar(a)}};
  s["channels"] = x2;
  s["X2_tilde_SC"] = ctx.X2_tilde_sc();
  out.write("correlations_summary.json", s.dump(2) + "\n");
}

void cmd_baseline(const RunOptions& opt, OutputSet& out) {
  const Config& c = opt.config;
  const LatticeSpec spec = read_lattice(c);
  const FermiPoint fp = fermi(spec.mu);
  const int x_max = static_cast<int>(c.integer("lattice.x_max", std::min(spec.L / 2, 60)));
  if (x_max < 1 || x_max > spec.L / 2)
    fail(ErrorKind::ConfigError, "key 'lattice.x_max' must lie in [1, L/2]");

  std::vector<std::string> header = {"axis", "x", "x0"};
  complex_columns(header, "g");
  complex_columns(header, "free");
  CsvTable prop(header);
  CsvTable resp({"x", "omega_C"});
  for (int x = 1; x <= x_max; ++x) {
    prop.row().add("space").add(static_cast<long long>(x)).add(0.0)
        .add(propagator_limit(x, 0.0, spec)).add(free_asymptotic(0.0, x, fp.pF, fp.vF));
    resp.row().add(static_cast<long long>(x)).add(response_C(x, 0.0, spec));
  }
  for (int t = 1; t <= x_max && t < spec.beta / 2; ++t)
    prop.row().add("time").add(0LL).add(static_cast<double>(t))
        .add(propagator_limit(0, t, spec)).add(free_asymptotic(t, 0.0, fp.pF, fp.vF));
  out.write("baseline_propagator.csv", prop.render());
  out.write("baseline_response.csv", resp.render());

  const LatticeSusceptibility k = susceptibility_lattice(spec);
  const double kappa_cont = 1.0 / (std::numbers::pi * fp.vF);
  const WardResidual w = ward_residual(static_cast<int>(c.integer("lattice.ward_n", 1)),
                                       c.integer("lattice.ward_m", 1), spec);
  ordered_json s;
  s["L"] = spec.L;
  s["beta"] = spec.beta;
  s["M"] = spec.M;
  s["mu"] = spec.mu;
  s["pF"] = fp.pF;
  s["vF"] = fp.vF;
  s["g_equal_time_origin"] = propagator_limit(0, 0.0, spec).real();
  s["kappa_lattice"] = {{"p_min", k.p_min}, {"at_pmin", k.at_pmin}, {"at_2pmin", k.at_2pmin},
                        {"extrapolated", k.extrapolated}};
  s["kappa_continuum_lambda0"] = kappa_cont;
  s["kappa_ratio"] = k.extrapolated / kappa_cont;
  s["ward"] = {{"residual", w.residual}, {"relative", w.relative},
               {"charge", complex_json(w.b.charge)}, {"current", complex_json(w.b.current)}};
  if (x_max >= 12) {
    const DecayFit f = response_decay_fit(spec, std::min(10, x_max / 2), x_max);
    s["omega_C_decay_exponent"] = f.exponent;
    s["omega_C_fit_points"] = f.points;
  }
  out.write("baseline_summary.json", s.dump(2) + "\n");
}

std::size_t cmd_sweep(const RunOptions& opt, OutputSet& out) {
  const Config& c = opt.config;
  const auto lams = c.grid("sweep.lambda", lambda_grid(c));
  const auto mus = c.grid("sweep.mu", {c.number("model.mu", 0.5)});
  const auto v0s = c.grid("sweep.v0", {c.number("model.v0", 1.0)});
  const auto v2s = c.grid("sweep.v2pf", {c.number("model.v2pf", 1.0)});
  const std::int64_t h_min = c.integer("sweep.h_min", -1000);
  if (h_min >= 0) fail(ErrorKind::ConfigError, "key 'sweep.h_min' must be negative");
  const SectorDomain sector = read_sector(c);
  const double gamma = c.number("model.gamma", 2.0);

  const std::size_t n = lams.size() * mus.size() * v0s.size() * v2s.size();
  struct Row {
    double lambda, mu, v0, v2pf;
    std::string status = "ok";
    std::vector<double> values;
  };
  std::vector<Row> rows(n);
  const std::vector<std::string> value_cols = {"K", "K_tilde", "eta_rho", "zeta_rho", "v_rho",
                                               "v_sigma", "K_bar", "kappa", "drude", "v",
                                               "g2_inf", "q_2C", "q_2S", "q_2SC", "q_2TC"};

  parallel_for(n, opt.threads, [&](std::size_t idx) {
    std::size_t r = idx;
    const std::size_t i2 = r % v2s.size(); r /= v2s.size();
    const std::size_t i0 = r % v0s.size(); r /= v0s.size();
    const std::size_t im = r % mus.size(); r /= mus.size();
    Row& row = rows[idx];
    row.lambda = lams[r];
    row.mu = mus[im];
    row.v0 = v0s[i0];
    row.v2pf = v2s[i2];
    row.values.assign(value_cols.size(), nan_v);
    try {
      ModelInputs in;
      in.lambda = row.lambda;
      in.mu = row.mu;
      in.v0 = row.v0;
      in.v2pf = row.v2pf;
      in.gamma = gamma;
      in.validate();
      require_in_sector(in.lambda, sector);
      const ExponentRecord e = exponent_record(in);
      const CouplingVector v0 = init_couplings(in);
      const HubbardFlowTrace tr = run_flow(v0, in, h_min);
      const RenormTrace rn = run_renorm(tr);
      auto q = [&](RenormChannel ch) {
        return v0.g1.real() > 0.0 ? q_coefficient(ch, rn, h_min, v0.g1, tr.a) : nan_v;
      };
      row.values = {e.ex.K, e.ex.K_tilde, e.ex.eta_rho, e.ex.zeta_rho, e.ex.rho.v, e.ex.sigma.v,
                    e.obs.K_bar, e.obs.kappa, e.obs.drude, e.obs.v, g2_limit(tr).real(),
                    q(RenormChannel::C2), q(RenormChannel::S2), q(RenormChannel::SC2),
                    q(RenormChannel::TC2)};
    } catch (const Error& err) {
      row.status = std::string(to_string(err.kind()));
    }
  });

  std::vector<std::string> header = {"index", "lambda", "mu", "v0", "v2pf", "status"};
  header.insert(header.end(), value_cols.begin(), value_cols.end());
  CsvTable csv(header);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Row& r = rows[i];
    if (r.status != "ok") ++failed;
    csv.row().add(static_cast<long long>(i)).add(r.lambda).add(r.mu).add(r.v0).add(r.v2pf).add(r.status);
    for (double v : r.values) csv.add(v);
  }
  out.write("sweep.csv", csv.render());
  return failed;
}

int run_command(const std::string& command, const RunOptions& opt, std::string& diagnostic) {
  const std::string started = utc_now();
  try {
    opt.config.reject_unknown(known_keys());
    OutputSet out(opt.out_dir);
    std::error_code ec;
    std::filesystem::remove(opt.out_dir / "manifest.json", ec);

    int code = 0;
    if (command == "flow") cmd_flow(opt, out);
    else if (command == "exponents") cmd_exponents(opt, out);
    else if (command == "correlations") cmd_correlations(opt, out);
    else if (command == "baseline") cmd_baseline(opt, out);
    else if (command == "sweep") {
      const std::size_t failed = cmd_sweep(opt, out);
      if (failed) {
        diagnostic = std::to_string(failed) + " sweep point(s) failed; see the status column";
        code = 1;
      }
    } else {
      fail(ErrorKind::ConfigError, "unknown command '" + command + "'");
    }

    ordered_json m;
    m["tool"] = "luttflow";
    m["version"] = LUTTFLOW_VERSION;
    m["command"] = command;
    m["config"] = opt.config.values();
    m["seed"] = opt.seed;
    m["threads"] = opt.threads;
    m["started_utc"] = started;
    m["finished_utc"] = utc_now();
    ordered_json files = ordered_json::array();
    for (const auto& r : out.records())
      files.push_back({{"file", r.file}, {"sha256", r.sha256}, {"bytes", r.bytes}});
    m["outputs"] = files;
    write_atomic(opt.out_dir / "manifest.json", m.dump(2) + "\n");
    return code;
  } catch (const Error& e) {
    diagnostic = e.what();
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    diagnostic = e.what();
    return 1;
  }
}

}  // namespace luttflow::cli
