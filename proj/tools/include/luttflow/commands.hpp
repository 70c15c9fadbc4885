#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "luttflow/config.hpp"
#include "luttflow/error.hpp"
#include "luttflow/output.hpp"

namespace luttflow::cli {

struct RunOptions {
  Config config;
  std::filesystem::path out_dir = "luttflow_out";
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

// Every command writes its files through `out` and returns normally, or throws Error.
void cmd_flow(const RunOptions& opt, OutputSet& out);
void cmd_exponents(const RunOptions& opt, OutputSet& out);
void cmd_correlations(const RunOptions& opt, OutputSet& out);
void cmd_baseline(const RunOptions& opt, OutputSet& out);
// returns the number of grid points that failed
std::size_t cmd_sweep(const RunOptions& opt, OutputSet& out);

const std::vector<std::string>& command_names();
const std::vector<std::string>& known_keys();

// 0 success, 1 computation error, 2 config/domain error
int exit_code_for(ErrorKind kind);

// Runs a command end to end: stale manifest removed, outputs written, manifest last.
int run_command(const std::string& command, const RunOptions& opt, std::string& diagnostic);

}  // namespace luttflow::cli
