#include "obslab/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "obslab/core/io.hpp"

#ifndef OBSLAB_VERSION
#define OBSLAB_VERSION "0.0.0"
#endif

namespace obslab::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no inf or NaN; they travel as strings.
ojson jnum(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Columns {
  const char* param;
  const char* measured;
  const char* reference;
  const char* slack;
};

Columns columns(const std::string& sub) {
  if (sub == "up-constant") return {"band limit", "UP constant 1/lambda_min", "-", "-"};
  if (sub == "spectral-scan") return {"ball radius lambda", "spectral constant", "c_spec = log(C)/(1+lambda)", "-"};
  if (sub == "obs-constant")
    return {"horizon T", "observability constant", "1/T (full-set value)", "relative change under n_t doubling"};
  if (sub == "two-time") return {"(T, S)", "two-time constant", "-", "-"};
  if (sub == "wwzz") return {"C1 / C2", "constant", "other constant", "relative gap"};
  if (sub == "resolvent")
    return {"fixed quantity", "minimal m, or minimal M at fixed m", "fixed M or m", "certified slack"};
  if (sub == "resolvent-scan") return {"lambda", "minimal M at m_fixed", "c lambda^exponent", "reference - M"};
  if (sub == "algebra-scan") return {"D", "inf ratio", "0.5", "inf ratio - 0.5"};
  if (sub == "miller") return {"horizon T", "observability constant", "m T/(T^2 - M pi^2)", "reference/measured"};
  if (sub == "heat-obs") return {"horizon T", "heat observability constant", "-", "relative change under n_t doubling"};
  if (sub == "thickness") return {"centre index", "|O cap B|/|B|", "gamma", "ratio - gamma"};
  if (sub == "thinness") return {"centre index", "annulus share of the ball", "epsilon", "epsilon - ratio"};
  if (sub == "duality") return {"t", "C1/rho1(C2/rho2(t))", "t", "measured - t"};
  if (sub == "sharpness") return {"comb width X", "up_ratio", "X", "up_ratio - X"};
  return {"parameter", "measured", "reference", "slack"};
}

}  // namespace

ojson csv_schema(const std::string& subcommand) {
  const Columns c = columns(subcommand);
  ojson cols = ojson::array();
  cols.push_back({{"name", "param"}, {"meaning", c.param}});
  cols.push_back({{"name", "measured"}, {"meaning", c.measured}});
  cols.push_back({{"name", "reference"}, {"meaning", c.reference}});
  cols.push_back({{"name", "slack"}, {"meaning", c.slack}});
  cols.push_back({{"name", "residual"}, {"meaning", "eigen residual ||Au - theta u|| / ||A|| (empty when no eigensolve)"}});
  cols.push_back({{"name", "iterations"}, {"meaning", "operator applications (0 when no eigensolve)"}});
  return {{"subcommand", subcommand},
          {"columns", cols},
          {"notes", "empty cell: not applicable; inf marks an unbounded constant"}};
}

std::string to_csv(const Report& r, const RunConfig& c) {
  std::ostringstream os;
  os << "# obslab " << OBSLAB_VERSION << " " << r.subcommand << " config_hash=" << hex(c.hash) << " seed=" << c.seed
     << "\n";
  os << "param,measured,reference,slack,residual,iterations\n";
  for (const Row& row : r.rows)
    os << csv_field(row.param) << ',' << num(row.measured) << ',' << num(row.reference) << ',' << num(row.slack)
       << ',' << num(row.residual) << ',' << row.iterations << '\n';
  return os.str();
}

ojson to_json(const Report& r, const RunConfig& c) {
  ojson j;
  j["software"] = {{"name", "obslab"}, {"version", OBSLAB_VERSION}};
  j["subcommand"] = r.subcommand;
  j["config_hash"] = hex(c.hash);
  j["config_path"] = c.path.string();
  j["seed"] = c.seed;
  j["grid"] = {{"d", c.grid.dim()}, {"n", c.grid.n()}, {"box_len", c.grid.box_len()}};
  ojson params = ojson::object();
  if (const auto it = c.tree.find("experiment"); it != c.tree.not_found())
    for (const auto& [k, v] : it->second) params[k] = v.data();
  j["experiment"] = params;
  j["verdict"] = r.verdict;
  ojson rows = ojson::array();
  for (const Row& row : r.rows)
    rows.push_back({{"param", row.param},
                    {"measured", jnum(row.measured)},
                    {"reference", jnum(row.reference)},
                    {"slack", jnum(row.slack)},
                    {"residual", jnum(row.residual)},
                    {"iterations", row.iterations}});
  j["rows"] = rows;
  ojson details = r.details;
  for (auto& [k, v] : details.items())
    if (v.is_number_float() && !std::isfinite(v.get<double>())) v = jnum(v.get<double>());
  j["details"] = details;
  j["warnings"] = r.warnings;
  return j;
}

std::string to_plot_data(const Report& r, const RunConfig& c) {
  std::ostringstream os;
  os << "# obslab " << OBSLAB_VERSION << " " << r.subcommand << " config_hash=" << hex(c.hash) << "\n";
  for (std::size_t k = 0; k < r.curves.size(); ++k) {
    const Curve& cv = r.curves[k];
    if (k) os << "\n\n";
    os << "# curve " << cv.name << ": " << cv.x_label << " vs " << cv.y_label << "\n";
    for (const auto& [x, y] : cv.points) os << num(x) << ' ' << num(y) << '\n';
  }
  return os.str();
}

std::vector<std::filesystem::path> emit_report(const Report& r, const RunConfig& c,
                                               const std::vector<std::string>& formats,
                                               const std::filesystem::path& dir) {
  if (formats.empty()) throw ConfigError("no output formats requested");
  for (const auto& f : formats)
    if (f != "csv" && f != "json" && f != "plot" && f != "field")
      throw ConfigError("unknown output format '" + f + "'");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& p, const std::string& body) {
    std::ofstream os(p, std::ios::binary);
    os << body;
    if (!os) throw std::runtime_error("cannot write " + p.string());
    written.push_back(p);
  };
  const std::string stem = r.subcommand;
  for (const auto& f : formats) {
    if (f == "csv") {
      write(dir / (stem + ".csv"), to_csv(r, c));
      ojson schema = csv_schema(stem);
      schema["config_hash"] = hex(c.hash);
      write(dir / (stem + ".schema.json"), schema.dump(2) + "\n");
    } else if (f == "json") {
      write(dir / (stem + ".json"), to_json(r, c).dump(2) + "\n");
    } else if (f == "plot") {
      write(dir / (stem + ".plot.dat"), to_plot_data(r, c));
    } else if (f == "field" && r.extremizer) {
      // The binary header has no room for the hash; it goes in a sidecar.
      const auto p = dir / (stem + ".field.bin");
      io::save(p, *r.extremizer);
      written.push_back(p);
      write(dir / (stem + ".field.txt"), "config_hash=" + hex(c.hash) + "\n");
    }
  }
  return written;
}

}  // namespace obslab::cli
