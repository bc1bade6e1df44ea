#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "linserlab/cli.hpp"

namespace cli = linserlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact linear-series computations with checkable certificates", "linserlab"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = linserlab::kDefaultSeed;
  std::string output;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for every random choice")->capture_default_str();
  app.add_option("-o,--output", output, "write the JSON report (the certificate for `empty`) to a file");
  app.add_flag("--json", as_json, "print the JSON report instead of text");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::string> actions, inputs;
  for (const auto& def : cli::subcommands()) {
    auto* sub = app.add_subcommand(def.name, def.help);
    if (!def.actions.empty())
      sub->add_option("action", actions[def.name], "one of the actions")->required()->check(CLI::IsMember(def.actions));
    if (def.positional_input) sub->add_option("file", inputs[def.name], "input file")->required();
    for (const auto& o : def.options) sub->add_option("--" + o.name, values[def.name][o.name], o.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  cli::Command cmd;
  cmd.seed = seed;
  for (const auto* sub : app.get_subcommands()) {
    cmd.subcommand = sub->get_name();
    cmd.action = actions[cmd.subcommand];
    if (!inputs[cmd.subcommand].empty()) cmd.input = inputs[cmd.subcommand];
    for (const auto& [name, value] : values[cmd.subcommand])
      if (sub->count("--" + name) > 0) cmd.options[name] = value;
  }
  if (!output.empty()) cmd.output = output;

  const auto out = cli::run(cmd);
  if (as_json)
    std::cout << out.report.dump(2) << "\n";
  else
    (out.exit_code == cli::kUsage ? std::cerr : std::cout) << out.text;

  if (cmd.output && out.exit_code != cli::kUsage) {
    std::ofstream f(*cmd.output);
    f << (out.artifact ? *out.artifact : out.report).dump(2) << "\n";
    if (!f) {
      std::cerr << "error: cannot write " << *cmd.output << "\n";
      return cli::kUsage;
    }
  }
  return out.exit_code;
}
