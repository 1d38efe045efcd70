#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "obslab/cli/config.hpp"
#include "obslab/core/field.hpp"

namespace obslab::cli {

// One CSV row. NaN prints as an empty cell.
struct Row {
  std::string param;
  double measured = 0.0;
  double reference = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
};

struct Curve {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

struct Report {
  std::string subcommand;
  std::vector<Row> rows;
  std::vector<Curve> curves;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  std::optional<Field> extremizer;
  bool verdict = true;
};

// Column meanings of the CSV for each subcommand.
nlohmann::ordered_json csv_schema(const std::string& subcommand);

std::string to_csv(const Report& report, const RunConfig& config);
nlohmann::ordered_json to_json(const Report& report, const RunConfig& config);
std::string to_plot_data(const Report& report, const RunConfig& config);

// Writes <dir>/<subcommand>.{csv,json,plot.dat,field.bin} as selected, plus
// <dir>/<subcommand>.schema.json. Returns the files written. Throws
// ConfigError on an empty or unknown format list and std::runtime_error when
// the directory cannot be written.
std::vector<std::filesystem::path> emit_report(const Report& report, const RunConfig& config,
                                               const std::vector<std::string>& formats,
                                               const std::filesystem::path& dir);

}  // namespace obslab::cli
