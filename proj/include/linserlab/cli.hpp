#pragma once

// Batch front end. `run` dispatches a parsed command and returns the exit
// code together with a human report and the machine report.

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linserlab/exact.hpp"

namespace linserlab::cli {

inline constexpr const char* kVersion = LINSERLAB_VERSION;

enum ExitCode : int { kSuccess = 0, kUsage = 1, kCounterWitness = 2, kUndecided = 3 };

struct OptionDef {
  OptionDef(std::string n, std::string h, std::vector<std::string> a = {})
      : name(std::move(n)), help(std::move(h)), actions(std::move(a)) {}
  std::string name;  // without the leading dashes
  std::string help;
  std::vector<std::string> actions;  // empty: every action
};

struct SubcommandDef {
  std::string name;
  std::string help;
  std::vector<std::string> actions;  // empty: no action word
  std::vector<OptionDef> options;
  bool positional_input = false;     // `verify <file>`
};

const std::vector<SubcommandDef>& subcommands();
const SubcommandDef* find_subcommand(const std::string& name);

struct Command {
  std::string subcommand;
  std::string action;
  std::map<std::string, std::string> options;
  std::optional<std::string> input;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> output;  // -o: report, or the certificate for `empty`
};

struct Outcome {
  int exit_code = kSuccess;
  std::string text;
  nlohmann::json report;  // {tool, version, seed, subcommand, action?, result} or {.., error}
  std::optional<nlohmann::json> artifact;  // written to Command::output when set
};

/// Never throws; errors become exit code 1 with an `error` report.
Outcome run(const Command& cmd);

}  // namespace linserlab::cli
