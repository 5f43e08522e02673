#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace grover::cli {

enum ExitCode : int { kSuccess = 0, kDisagreement = 1, kInputError = 2 };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> bethe;       // "2,3,1"
  std::optional<std::string> graph_path;  // edge-list file
  std::uint64_t steps = 10;
  std::optional<std::uint64_t> cap;
  std::size_t max_levels = 4;
  int max_degree = 3;
  std::size_t max_vertices = 40;
  std::string format = "json";
  bool confirm_bruteforce = false;
  std::size_t dense_limit = 2000;
  bool numeric = false;
  std::size_t initial_arc = 0;
  unsigned jobs = 1;
};

int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_simulate(const RunConfig& config, std::ostream& out);
int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_spectrum(const RunConfig& config, std::ostream& out);

/// Parses arguments (without the program name) and dispatches. Input
/// errors are reported on `err` with exit code kInputError.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grover::cli
