#pragma once

// Run configuration, INI syntax:
//
//   [grid]            d, n, box_len
//   [set:NAME]        shape = full | empty | periodic_slab | hyperbola_complement
//                     | ball_lattice_complement | ball | density_holes | union
//                     | intersection | complement | dilation | file
//   [density:NAME]    family = constant | power_capped | scaled_power; params
//   [experiment]      name = <subcommand>, then that subcommand's keys
//   [output]          dir, formats (csv, json, plot, field), seed (required)

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

#include "obslab/core/mask.hpp"
#include "obslab/geometry/density.hpp"
#include "obslab/geometry/sets.hpp"

namespace obslab::cli {

// Malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Typed access to one INI section. Missing or unparsable keys throw
// ConfigError naming the section and key.
class Section {
 public:
  Section(std::string name, const boost::property_tree::ptree* tree) : name_(std::move(name)), tree_(tree) {}

  bool has(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number(const std::string& key, double fallback) const;
  int integer(const std::string& key) const;
  int integer(const std::string& key, int fallback) const;
  // Comma- or whitespace-separated numbers.
  std::vector<double> list(const std::string& key) const;
  std::vector<double> list(const std::string& key, std::vector<double> fallback) const;

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  const boost::property_tree::ptree* tree_;
};

struct RunConfig {
  std::filesystem::path path;
  std::string text;        // file contents, as hashed
  std::uint64_t hash = 0;  // FNV-1a over text
  boost::property_tree::ptree tree;

  GridSpec grid = make_grid(1, 8, 1.0);
  std::map<std::string, SetPtr> sets;
  std::map<std::string, Density> densities;
  std::map<std::string, std::filesystem::path> mask_files;

  std::string experiment;  // empty when the section omits name
  std::filesystem::path out_dir = "out";
  std::vector<std::string> formats;
  std::uint64_t seed = 0;

  Section section(const std::string& name) const;
  Section params() const { return section("experiment"); }

  // Named set sampled on the space grid, or on its frequency lattice.
  Mask mask(const std::string& name, bool frequency = false) const;
  const SetSpec& set(const std::string& name) const;
  const Density& density(const std::string& name) const;
};

std::uint64_t fnv1a(std::string_view bytes) noexcept;
std::string hex(std::uint64_t v);

RunConfig parse_config(const std::string& text, std::filesystem::path origin = {});
RunConfig load_config(const std::filesystem::path& path);

}  // namespace obslab::cli
