#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mlq/config.hpp"
#include "mlq/report.hpp"

namespace mlq {

inline constexpr const char* kVersion = "0.1.0";

struct RunOptions {
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::uint64_t seed = 1;
  std::optional<std::size_t> lmax;
  LengthMode mode = LengthMode::integer;
  double tolerance = 1e-10;
};

enum class ExitCode : int {
  ok = 0,
  failure = 1,
  parse = 2,
  guard = 3,
  invariant = 4,
  input = 5,
  numerics = 6,
};

// Exit code and diagnostic tag ("parse", "guard", ...) for an exception.
std::pair<ExitCode, std::string> classify(const std::exception& e);

const std::vector<std::string>& subcommands();

// Runs one subcommand on a parsed config. Throws on invalid input; failed
// invariants are recorded as checks in the report.
Report run_experiment(const std::string& subcommand, const Json& config, const RunOptions& options);

Json run_manifest(const std::string& subcommand, const Json& config, const RunOptions& options, const Report& report);

// Loads the config, runs, prints the report to `out`, writes <out_dir>/<subcommand>.tsv
// and manifest.json when requested, and maps failures to exit codes with a
// diagnostic on `err`.
int run_cli(const std::string& subcommand, const RunOptions& options, std::ostream& out, std::ostream& err);

// Normalized state with `terms` random basis strings (Gaussian amplitudes)
// drawn from the given lengths; every string of those lengths when terms == 0.
ManyLetterVector random_state(const AlphabetPtr& alphabet, const std::vector<std::size_t>& lengths, std::size_t terms,
                              std::mt19937_64& rng);

// Mixture of `rank` random states with Dirichlet-like weights.
MessageMatrix random_density(const AlphabetPtr& alphabet, const std::vector<std::size_t>& lengths, std::size_t rank,
                             std::size_t terms, std::mt19937_64& rng);

}  // namespace mlq
