#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "obslab/cli/config.hpp"
#include "obslab/cli/report.hpp"

namespace obslab::cli {

enum ExitCode : int { ok = 0, config_error = 2, numerical_failure = 3, precondition_violation = 4 };

const std::vector<std::string>& subcommands();

// Runs the experiment described by `config`. `force` permits runs below the
// lambda_0 thresholds; they are flagged in the report.
Report execute(const std::string& subcommand, const RunConfig& config, bool force = false);

// Load, execute, emit. Errors are caught, printed to `err` as one JSON
// diagnostic, written to <out>/<subcommand>.diagnostic.json when possible,
// and mapped to an ExitCode.
int run(const std::string& subcommand, const std::filesystem::path& config_path,
        const std::optional<std::filesystem::path>& out_dir, bool force, std::ostream& out, std::ostream& err);

}  // namespace obslab::cli
