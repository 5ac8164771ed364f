#ifndef MCGORBIT_DRIVER_HPP_
#define MCGORBIT_DRIVER_HPP_

// Command front end shared by the CLI binary and the test suites: parses a
// problem configuration (JSON text), runs one command, and renders a
// deterministic JSON report.
//
// Exit codes: 0 success, 1 malformed input (bad JSON, range or schema
// violations), 2 relator validation failure, 3 cap exhaustion where the
// command needs a completed search (classify / bounds).

#include <cstdint>
#include <optional>
#include <string>

namespace mcgorbit {

struct RunOptions {
  std::optional<std::string> word;   // act: mcg tokens, applied left to right
  std::optional<std::string> group;  // orbit: "pure" | "full"
  std::optional<std::int64_t> cap;   // orbit cap / classify search cap
  std::optional<std::int64_t> rounds;  // selftest
};

struct RunOutcome {
  int exit_code = 0;
  std::string report;  // JSON object, one line
};

// command: validate | act | orbit | classify | bounds | selftest.
// config_text is ignored by selftest.
RunOutcome run_command(const std::string& command, const std::string& config_text,
                       const RunOptions& options);

// Batch mode over a JSON-lines file: every line holds a config object with a
// "command" field. Results append to out_path as JSON lines keyed by a hash
// of the input line; lines whose key already appears in the output file are
// skipped, which makes sweeps resumable. Returns a process exit code.
int run_sweep(const std::string& input_path, const std::string& out_path);

}  // namespace mcgorbit

#endif  // MCGORBIT_DRIVER_HPP_
