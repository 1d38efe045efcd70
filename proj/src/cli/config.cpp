#include "obslab/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>

#include "obslab/core/errors.hpp"
#include "obslab/core/io.hpp"

namespace obslab::cli {

namespace pt = boost::property_tree;

namespace {

double parse_number(const std::string& where, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": '" + s + "' is not a number");
  }
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Point parse_point(const Section& s, const std::string& key) {
  const auto v = s.list(key);
  if (v.empty() || v.size() > 3) throw ConfigError("[" + s.name() + "] " + key + ": expected 1 to 3 coordinates");
  Point p{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
  return p;
}

}  // namespace

bool Section::has(const std::string& key) const { return tree_ && tree_->find(key) != tree_->not_found(); }

std::string Section::text(const std::string& key) const {
  if (!has(key)) throw ConfigError("[" + name_ + "] is missing '" + key + "'");
  return tree_->get<std::string>(pt::ptree::path_type(key, '\0'));
}

std::string Section::text(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}

double Section::number(const std::string& key) const { return parse_number("[" + name_ + "] " + key, text(key)); }

double Section::number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

int Section::integer(const std::string& key) const {
  const double v = number(key);
  if (v != std::floor(v) || std::fabs(v) > 2e9) throw ConfigError("[" + name_ + "] " + key + ": expected an integer");
  return static_cast<int>(v);
}

int Section::integer(const std::string& key, int fallback) const { return has(key) ? integer(key) : fallback; }

std::vector<double> Section::list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& tok : split(text(key))) out.push_back(parse_number("[" + name_ + "] " + key, tok));
  return out;
}

std::vector<double> Section::list(const std::string& key, std::vector<double> fallback) const {
  return has(key) ? list(key) : std::move(fallback);
}

Section RunConfig::section(const std::string& name) const {
  const auto it = tree.find(name);
  return Section(name, it == tree.not_found() ? nullptr : &it->second);
}

const SetSpec& RunConfig::set(const std::string& name) const {
  const auto it = sets.find(name);
  if (it == sets.end()) {
    if (mask_files.count(name)) throw ConfigError("set '" + name + "' is a mask file and cannot be combined");
    throw ConfigError("undefined set '" + name + "'");
  }
  return *it->second;
}

Mask RunConfig::mask(const std::string& name, bool frequency) const {
  const GridSpec g = frequency ? grid.as_frequency() : grid.as_space();
  if (const auto f = mask_files.find(name); f != mask_files.end()) {
    Mask m = io::load_mask(f->second);
    if (!(m.grid() == g))
      throw ConfigError("mask file for set '" + name + "' does not match the configured " +
                        (frequency ? "frequency lattice" : "space grid"));
    return m;
  }
  return make_set(g, set(name));
}

const Density& RunConfig::density(const std::string& name) const {
  const auto it = densities.find(name);
  if (it == densities.end()) throw ConfigError("undefined density '" + name + "'");
  return it->second;
}

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

RunConfig parse_config(const std::string& text, std::filesystem::path origin) {
  RunConfig c;
  c.path = std::move(origin);
  c.text = text;
  c.hash = fnv1a(text);
  try {
    std::istringstream is(text);
    pt::ini_parser::read_ini(is, c.tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config does not parse: ") + e.message() + " (line " + std::to_string(e.line()) +
                      ")");
  }

  const Section grid = c.section("grid");
  const int d = grid.integer("d"), n = grid.integer("n");
  const double L = grid.number("box_len");
  try {
    c.grid = make_grid(d, n, L);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("[grid] ") + e.what());
  }

  const Section out = c.section("output");
  if (!out.has("seed")) throw ConfigError("[output] seed is mandatory");
  const double seed = out.number("seed");
  if (seed < 0 || seed != std::floor(seed) || seed > 9.007199254740992e15)
    throw ConfigError("[output] seed must be a nonnegative integer");
  c.seed = static_cast<std::uint64_t>(seed);
  c.out_dir = out.text("dir", "out");
  for (auto& f : split(out.text("formats", "csv,json"))) c.formats.push_back(f);
  c.experiment = c.params().text("name", "");

  // Densities first; sets may refer to them.
  std::map<std::string, const pt::ptree*> set_nodes;
  for (const auto& [key, node] : c.tree) {
    if (key.rfind("density:", 0) == 0) {
      const std::string name = key.substr(8);
      const Section s(key, &node);
      const auto params = s.list("params", {});
      try {
        c.densities.emplace(name, make_density(s.text("family"), params));
      } catch (const PreconditionError& e) {
        throw ConfigError("[" + key + "] " + e.what());
      }
    } else if (key.rfind("set:", 0) == 0) {
      set_nodes.emplace(key.substr(4), &node);
    } else if (key != "grid" && key != "output" && key != "experiment") {
      throw ConfigError("unknown section [" + key + "]");
    }
  }

  std::set<std::string> visiting;
  std::function<SetPtr(const std::string&)> build = [&](const std::string& name) -> SetPtr {
    if (const auto it = c.sets.find(name); it != c.sets.end()) return it->second;
    const auto node = set_nodes.find(name);
    if (node == set_nodes.end()) throw ConfigError("undefined set '" + name + "'");
    if (!visiting.insert(name).second) throw ConfigError("set '" + name + "' refers to itself");
    const Section s("set:" + name, node->second);
    const std::string shape = s.text("shape");
    auto ref = [&](const std::string& key) {
      const std::string other = s.text(key);
      if (set_nodes.count(other) && Section("set:" + other, set_nodes.at(other)).text("shape") == "file")
        throw ConfigError("[set:" + name + "] cannot combine the mask file '" + other + "'");
      return build(other);
    };
    SetPtr p;
    if (shape == "full") {
      p = make_spec(shape::Full{});
    } else if (shape == "empty") {
      p = make_spec(shape::Empty{});
    } else if (shape == "periodic_slab") {
      p = make_spec(shape::PeriodicSlab{s.number("period"), s.number("fraction"), s.integer("axis", 0),
                                        s.number("offset", 0.0)});
    } else if (shape == "hyperbola_complement") {
      p = make_spec(shape::HyperbolaComplement{s.number("C")});
    } else if (shape == "ball_lattice_complement") {
      p = make_spec(shape::BallLatticeComplement{s.integer("k_min", 1)});
    } else if (shape == "ball") {
      p = make_spec(shape::Ball{parse_point(s, "center"), s.number("radius")});
    } else if (shape == "density_holes") {
      p = make_spec(shape::DensityHoles{s.number("spacing", 1.0), s.integer("K"), s.number("fraction"),
                                        c.density(s.text("density"))});
    } else if (shape == "union") {
      p = make_spec(shape::Union{ref("a"), ref("b")});
    } else if (shape == "intersection") {
      p = make_spec(shape::Intersection{ref("a"), ref("b")});
    } else if (shape == "complement") {
      p = make_spec(shape::Complement{ref("a")});
    } else if (shape == "dilation") {
      p = make_spec(shape::Dilation{s.number("r"), ref("a")});
    } else {
      throw ConfigError("[set:" + name + "] unknown shape '" + shape + "'");
    }
    visiting.erase(name);
    c.sets.emplace(name, p);
    return p;
  };
  for (const auto& [name, node] : set_nodes) {
    const Section s("set:" + name, node);
    if (s.text("shape") == "file") {
      std::filesystem::path file = s.text("path");
      if (file.is_relative() && !c.path.empty()) file = c.path.parent_path() / file;
      if (!std::filesystem::exists(file)) throw ConfigError("[set:" + name + "] file " + file.string() + " not found");
      c.mask_files.emplace(name, file);
    }
  }
  for (const auto& [name, node] : set_nodes)
    if (!c.mask_files.count(name)) build(name);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace obslab::cli
