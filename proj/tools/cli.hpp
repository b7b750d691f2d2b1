// Command dispatch for the pencillab tool, kept out of main() so tests can
// drive it directly.
#ifndef PENCILLAB_TOOLS_CLI_HPP
#define PENCILLAB_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace pencillab::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInvariantViolation = 3,
  kUnsupported = 4,
};

struct JobSpec {
  std::string command;  // analyze, dynkin, orbit, connection, kernel, relexact, melnikov, bounds, selftest, batch
  std::optional<std::string> input_path;
  std::optional<nlohmann::json> input;  // inline input, takes precedence over input_path
  std::optional<std::string> output_path;
  std::optional<int> canonical_d;
  std::optional<int> n;
  std::optional<int> max_d;  // overrides PENCILLAB_MAX_D
  std::optional<std::string> start;      // orbit: "face:N" or "saddle:N"
  std::optional<std::string> partition;  // bounds: "1,2"
  std::uint64_t seed = 1;
  int workers = 0;  // batch; 0 means hardware concurrency
  int verbosity = 0;
};

/// Computes the report for one job. Throws the library's error types.
nlohmann::json execute(const JobSpec& job);

/// execute() plus error mapping: writes the report (indented JSON and a
/// newline) to output_path or `out`, diagnostics to `err`, and returns the
/// exit code.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Maps the current exception to an exit code and message. Call from a
/// catch block.
int classify_current_exception(std::string& message);

}  // namespace pencillab::cli

#endif  // PENCILLAB_TOOLS_CLI_HPP
