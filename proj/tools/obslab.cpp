// obslab <subcommand> --config <path> [--out <dir>] [--force-subthreshold]

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "obslab/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"obslab: sharp constants of observability and uncertainty inequalities"};
  app.require_subcommand(1);
  std::string config;
  std::string out;
  bool force = false;
  for (const auto& name : obslab::cli::subcommands()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--config", config, "INI run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory (overrides [output] dir)");
    sub->add_flag("--force-subthreshold", force, "allow lambda below the lambda_0 thresholds");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : obslab::cli::config_error;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  return obslab::cli::run(name, config, out.empty() ? std::nullopt : std::optional<std::filesystem::path>(out),
                          force, std::cout, std::cerr);
}
