// Command-line front end: parse a problem config, run one command, print the
// JSON report. See README.md for the config schema and exit codes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mcgorbit/driver.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("config", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const mcgorbit::RunOutcome& outcome, const std::string& out_path) {
  std::cout << outcome.report << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
    out << outcome.report << "\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mapping class group orbits of scalar, affine, and reducible "
               "rank-2 surface group representations, in exact arithmetic"};
  app.require_subcommand(1);

  std::string config_path, out_path, word, group;
  std::int64_t cap = -1;
  std::int64_t rounds = -1;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config) {
      cmd->add_option("config", config_path, "problem config JSON file")->required();
    }
    cmd->add_option("--out", out_path, "also write the report to this file");
  };

  auto* validate = app.add_subcommand("validate", "relator check and structural flags");
  add_common(validate, true);

  auto* act = app.add_subcommand("act", "apply a mapping class group word");
  add_common(act, true);
  act->add_option("--word", word, "mcg tokens, first token acts first")->required();

  auto* orbit = app.add_subcommand("orbit", "breadth-first orbit enumeration");
  add_common(orbit, true);
  orbit->add_option("--group", group, "pure | full");
  orbit->add_option("--cap", cap, "largest number of classes to enumerate");

  auto* classify = app.add_subcommand("classify", "finiteness decision with bounds");
  add_common(classify, true);
  classify->add_option("--cap", cap, "preparation search budget in classes");

  auto* bounds = app.add_subcommand("bounds", "cardinality bounds only");
  add_common(bounds, true);
  bounds->add_option("--cap", cap, "preparation search budget in classes");

  auto* selftest = app.add_subcommand("selftest", "relation and action-axiom suites");
  add_common(selftest, false);
  selftest->add_option("--rounds", rounds, "randomized rounds (default 40)");

  auto* sweep = app.add_subcommand("sweep", "batch mode over a JSON-lines file");
  std::string sweep_in, sweep_out;
  sweep->add_option("input", sweep_in, "JSON-lines input, one config per line")->required();
  sweep->add_option("--out", sweep_out, "JSON-lines results (appended, resumable)")->required();

  CLI11_PARSE(app, argc, argv);

  if (sweep->parsed()) {
    return mcgorbit::run_sweep(sweep_in, sweep_out);
  }

  mcgorbit::RunOptions options;
  if (!word.empty()) options.word = word;
  if (!group.empty()) options.group = group;
  if (cap >= 0) options.cap = cap;
  if (rounds >= 0) options.rounds = rounds;

  const std::string command = app.get_subcommands().front()->get_name();
  std::string config_text;
  if (command != "selftest") {
    try {
      config_text = read_file(config_path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  return emit(mcgorbit::run_command(command, config_text, options), out_path);
}
