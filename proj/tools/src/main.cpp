#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "luttflow/commands.hpp"

int main(int argc, char** argv) {
  using namespace luttflow::cli;

  CLI::App app{"Renormalization-group flows, exponents and free-lattice baselines"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "dotted key = value file");
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_option("--threads", threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized perturbation schedules");

  for (const auto& name : command_names()) app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunOptions opt;
  opt.threads = threads;
  opt.seed = seed;
  try {
    if (!config_path.empty()) opt.config = Config::load(config_path);
  } catch (const luttflow::Error& e) {
    std::cerr << "luttflow: " << e.what() << '\n';
    return 2;
  }
  opt.out_dir = !out_dir.empty() ? out_dir : opt.config.text("output.dir", "luttflow_out");

  const std::string command = app.get_subcommands().front()->get_name();
  std::string diagnostic;
  const int code = run_command(command, opt, diagnostic);
  if (!diagnostic.empty()) std::cerr << "luttflow " << command << ": " << diagnostic << '\n';
  return code;
}
