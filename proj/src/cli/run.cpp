#include "obslab/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "obslab/core/errors.hpp"
#include "obslab/core/io.hpp"
#include "obslab/geometry/annulus.hpp"
#include "obslab/geometry/lemmas.hpp"
#include "obslab/geometry/thickness.hpp"
#include "obslab/observability/algebra.hpp"
#include "obslab/observability/gramian.hpp"
#include "obslab/observability/miller.hpp"
#include "obslab/observability/resolvent.hpp"
#include "obslab/observability/wwzz.hpp"
#include "obslab/uncertainty/uncertainty.hpp"

namespace obslab::cli {

namespace {

using ojson = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

SolveOptions solve_options(const RunConfig& c) {
  const Section p = c.params();
  SolveOptions o;
  o.tol = p.number("tol", o.tol);
  o.max_matvecs = p.integer("max_matvecs", o.max_matvecs);
  const std::string m = p.text("method", "auto");
  if (m == "auto")
    o.method = linalg::SolverMethod::automatic;
  else if (m == "lanczos")
    o.method = linalg::SolverMethod::lanczos;
  else if (m == "dense")
    o.method = linalg::SolverMethod::dense;
  else
    throw ConfigError("[experiment] method must be auto, lanczos or dense");
  o.seed = c.seed;
  return o;
}

Row constant_row(std::string param, const ConstantReport& r, double reference = kNaN) {
  return Row{std::move(param), r.constant, reference, kNaN, r.eigen_residual, r.iterations};
}

ojson constant_details(const ConstantReport& r) {
  ojson j = {{"lambda_min", r.lambda_min},   {"method", r.method},         {"band", r.band},
             {"subspace_dim", r.subspace_dim}, {"iterations", r.iterations}, {"eigen_residual", r.eigen_residual}};
  ojson params = ojson::object();
  for (const auto& [k, v] : r.parameters) params[k] = std::isfinite(v) ? ojson(v) : ojson(fmt(v));
  j["parameters"] = params;
  j["trace"] = r.trace;
  return j;
}

std::vector<Point> centers(const RunConfig& c, int d, double default_half_width) {
  const Section p = c.params();
  const std::string kind = p.text("centers", "lattice");
  const double half = p.number("half_width", default_half_width);
  if (kind == "lattice") return lattice_centers(d, p.number("spacing", 1.0), half);
  if (kind == "random") return random_centers(d, static_cast<std::size_t>(p.integer("count", 100)), half, c.seed);
  throw ConfigError("[experiment] centers must be lattice or random");
}

std::optional<Field> potential(const RunConfig& c) {
  const Section p = c.params();
  if (!p.has("potential")) return std::nullopt;
  std::filesystem::path file = p.text("potential");
  if (file.is_relative() && !c.path.empty()) file = c.path.parent_path() / file;
  if (!std::filesystem::exists(file)) throw ConfigError("potential file " + file.string() + " not found");
  Field V = io::load_field(file);
  if (!(V.grid() == c.grid.as_space())) throw ConfigError("potential file does not match the configured grid");
  return V;
}

PropagatorKind propagator_kind(const RunConfig& c) {
  const Section p = c.params();
  const std::string k = p.text("propagator", "schrodinger");
  if (k == "schrodinger") return propagator::Schrodinger{};
  if (k == "fractional") return propagator::Fractional{p.number("s")};
  if (k == "heat") return propagator::Heat{};
  if (k == "potential") {
    auto V = potential(c);
    if (!V) throw ConfigError("[experiment] propagator = potential needs a potential file");
    return propagator::Potential{std::move(*V), p.integer("n_steps", 8)};
  }
  throw ConfigError("[experiment] unknown propagator '" + k + "'");
}

Report up_constant_cmd(const RunConfig& c) {
  const Section p = c.params();
  const double band = p.number("band");
  const auto r = up_constant({c.mask(p.text("O")), c.mask(p.text("Omega"), true), band}, solve_options(c));
  Report rep;
  rep.rows.push_back(constant_row("band=" + fmt(band), r));
  rep.details = constant_details(r);
  rep.extremizer = r.extremizer;
  return rep;
}

Report spectral_scan_cmd(const RunConfig& c) {
  const Section p = c.params();
  const Mask O = c.mask(p.text("O"));
  const auto opt = solve_options(c);
  Report rep;
  Curve curve{"spectral", "lambda", "log C", {}};
  ojson per = ojson::array();
  for (double lambda : p.list("lambdas")) {
    const auto r = spectral_constant(O, lambda, opt);
    const double cspec = std::log(r.constant) / (1.0 + lambda);
    rep.rows.push_back(constant_row(fmt(lambda), r, cspec));
    curve.points.emplace_back(lambda, std::log(r.constant));
    per.push_back(constant_details(r));
    rep.extremizer = r.extremizer;
  }
  rep.curves.push_back(curve);
  rep.details["solves"] = per;
  return rep;
}

Report obs_constant_cmd(const RunConfig& c, bool heat_only) {
  const Section p = c.params();
  const Mask O = c.mask(p.text("O"));
  const auto opt = solve_options(c);
  const int n_t = p.integer("n_t", 64);
  const double band = p.number("band");
  const PropagatorKind kind = heat_only ? PropagatorKind{propagator::Heat{}} : propagator_kind(c);
  const bool check_nt = p.integer("nt_check", 1) != 0;
  Report rep;
  Curve curve{heat_only ? "heat" : "observability", "T", "log C", {}};
  ojson per = ojson::array();
  for (double T : p.list("T")) {
    GramianSpec spec{O, T, n_t, kind, band};
    const auto r = obs_constant(spec, opt);
    ojson d = constant_details(r);
    double drift = kNaN;
    if (check_nt) {
      spec.n_t = 2 * n_t;
      const auto r2 = obs_constant(spec, opt);
      drift = std::fabs(r2.constant - r.constant) / std::max(r.constant, r2.constant);
      d["nt_doubling_drift"] = drift;
      if (drift > 1e-3)
        rep.warnings.push_back("T=" + fmt(T) + ": n_t doubling changes the constant by " + fmt(drift) +
                               "; the time quadrature is under-resolved");
    }
    rep.rows.push_back(Row{"T=" + fmt(T), r.constant, heat_only ? kNaN : 1.0 / T, drift, r.eigen_residual,
                           r.iterations});
    curve.points.emplace_back(T, std::log(r.constant));
    per.push_back(d);
    rep.extremizer = r.extremizer;
  }
  rep.curves.push_back(curve);
  rep.details["solves"] = per;
  return rep;
}

Report two_time_cmd(const RunConfig& c) {
  const Section p = c.params();
  const double T = p.number("T"), S = p.number("S", 0.0), band = p.number("band");
  const auto r = two_time_constant(c.mask(p.text("O1")), c.mask(p.text("O2")), T, S, band, solve_options(c));
  Report rep;
  rep.rows.push_back(constant_row("T=" + fmt(T) + " S=" + fmt(S), r));
  rep.details = constant_details(r);
  rep.extremizer = r.extremizer;
  return rep;
}

Report wwzz_cmd(const RunConfig& c) {
  const Section p = c.params();
  const double T = p.number("T"), band = p.number("band");
  const auto r = wwzz_check(c.mask(p.text("A")), c.set(p.text("B")), T, band, solve_options(c));
  Report rep;
  rep.rows.push_back(Row{"C1", r.up.constant, r.two.constant, r.gap, r.up.eigen_residual, r.up.iterations});
  rep.rows.push_back(Row{"C2", r.two.constant, r.up.constant, r.gap, r.two.eigen_residual, r.two.iterations});
  rep.details = {{"gap", r.gap}, {"dilation", r.dilation}, {"C1", constant_details(r.up)},
                 {"C2", constant_details(r.two)}};
  return rep;
}

ResolventProblem resolvent_problem(const RunConfig& c, const Mask& O, const Field* V) {
  const Section p = c.params();
  return {O, p.number("lambda"), p.number("band"), p.number("s", 1.0), V};
}

Report resolvent_cmd(const RunConfig& c) {
  const Section p = c.params();
  const Mask O = c.mask(p.text("O"));
  const auto V = potential(c);
  const auto prob = resolvent_problem(c, O, V ? &*V : nullptr);
  const auto opt = solve_options(c);
  Report rep;
  if (p.has("M") == p.has("m")) throw ConfigError("[experiment] give exactly one of M (for minimal m) or m");
  if (p.has("M")) {
    const double M = p.number("M");
    const auto r = resolvent_min_constant(prob, M, opt);
    rep.rows.push_back(Row{"M=" + fmt(M), r.constant, M, kNaN, r.eigen_residual, r.iterations});
    rep.details = constant_details(r);
    rep.extremizer = r.extremizer;
  } else {
    const double m = p.number("m");
    const auto r = resolvent_minimal_M(prob, m, opt);
    rep.rows.push_back(Row{"m=" + fmt(m), r.M, m, r.slack, kNaN, r.evaluations});
    rep.details = {{"M", r.M}, {"m", r.m}, {"slack", r.slack}, {"evaluations", r.evaluations},
                   {"last_infeasible_M", r.lo}};
  }
  rep.details["lambda"] = prob.lambda;
  rep.details["s"] = prob.s;
  rep.details["potential"] = V.has_value();
  return rep;
}

Report resolvent_scan_cmd(const RunConfig& c, bool force) {
  const Section p = c.params();
  ScalingSpec spec{c.mask(p.text("O")), p.number("alpha"), p.number("s", 1.0), p.number("gamma", 0.3), {},
                   p.number("m_fixed"), p.number("band"), force};
  if (p.has("lambdas")) {
    spec.lambdas = p.list("lambdas");
  } else {
    // Two decades above lambda_0, each value moved up onto a lattice shell.
    const double lam0 = resolvent_lambda0(c.grid.dim(), spec.alpha, spec.gamma, spec.s);
    const int count = p.integer("lambda_count", 5);
    for (int i = 0; i < count; ++i)
      spec.lambdas.push_back(lattice_shell_at_least(
          c.grid, lam0 * std::pow(100.0, count > 1 ? double(i) / (count - 1) : 0.0), spec.s));
  }
  const auto r = resolvent_scaling_fit(spec, solve_options(c));
  Report rep;
  Curve measured{"M", "lambda", "M", {}}, reference{"reference", "lambda", "c lambda^e", {}};
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
    rep.rows.push_back(Row{fmt(r.lambdas[i]), r.M[i], r.reference[i], r.reference[i] - r.M[i], kNaN, 0});
    measured.points.emplace_back(r.lambdas[i], r.M[i]);
    reference.points.emplace_back(r.lambdas[i], r.reference[i]);
  }
  rep.curves = {measured, reference};
  rep.details = {{"exponent", r.exponent},   {"prefactor", r.prefactor},
                 {"lambda0", r.lambda0},     {"m_fixed", r.m_fixed},
                 {"forced", r.forced},       {"thickness_min_ratio", r.thickness_min_ratio},
                 {"verdict", r.verdict}};
  rep.warnings = r.warnings;
  rep.verdict = r.verdict;
  return rep;
}

Report algebra_cmd(const RunConfig& c) {
  const Section p = c.params();
  const double s = p.number("s"), tau_max = p.number("tau_max", 1e3), lambda_max = p.number("lambda_max", 1e3);
  const int steps = p.integer("grid_steps", 1000);
  Report rep;
  ojson per = ojson::array();
  double cs = INFINITY;
  for (double D : p.list("D")) {
    const auto r = algebra_scan(s, D, tau_max, lambda_max, steps);
    rep.rows.push_back(Row{"D=" + fmt(D), r.inf_ratio, 0.5, r.inf_ratio - 0.5, kNaN, 0});
    per.push_back({{"D", D},
                   {"inf_ratio", r.inf_ratio},
                   {"argmin_tau", r.argmin_tau},
                   {"argmin_lambda", r.argmin_lambda},
                   {"admissible", r.admissible}});
    cs = std::min(cs, r.inf_ratio);
    rep.verdict = rep.verdict && r.verdict;
  }
  rep.details = {{"s", s}, {"empirical_c_s", cs}, {"scans", per}};
  return rep;
}

Report miller_cmd(const RunConfig& c) {
  const Section p = c.params();
  GramianSpec base{c.mask(p.text("O")), 1.0, p.integer("n_t", 64), propagator::Schrodinger{}, p.number("band")};
  const auto r = miller_probe(base, p.number("M"), p.number("m"), p.list("T"), p.number("lambda_lo"),
                              p.number("lambda_hi"), solve_options(c));
  Report rep;
  Curve measured{"measured", "T", "C", {}}, shape{"bound shape", "T", "m T/(T^2 - M pi^2)", {}};
  for (const auto& row : r.rows) {
    rep.rows.push_back(Row{"T=" + fmt(row.T), row.constant, row.bound_shape,
                           row.below_threshold ? kNaN : row.bound_shape / row.constant, kNaN, 0});
    measured.points.emplace_back(row.T, row.constant);
    if (!row.below_threshold) shape.points.emplace_back(row.T, row.bound_shape);
  }
  rep.curves = {measured, shape};
  rep.details = {{"M", r.M},         {"m", r.m},
                 {"lambda_lo", r.lambda_lo}, {"lambda_hi", r.lambda_hi},
                 {"threshold", r.threshold}, {"verdict", r.verdict},
                 {"C_epsilon", "not computable; bound shape only"}};
  rep.verdict = r.verdict;
  return rep;
}

Report thickness_cmd(const RunConfig& c) {
  const Section p = c.params();
  const Mask O = c.mask(p.text("O"));
  const double gamma = p.number("gamma");
  const auto cs = centers(c, c.grid.dim(), 0.25 * c.grid.box_len());
  const auto r = thickness_check(O, gamma, c.density(p.text("density")), cs);
  Report rep;
  for (std::size_t k = 0; k < r.centers.size(); ++k)
    rep.rows.push_back(Row{std::to_string(k), r.ratios[k], gamma, r.ratios[k] - gamma, kNaN, 0});
  ojson pts = ojson::array();
  for (std::size_t k = 0; k < r.centers.size(); ++k) {
    const auto& x = r.centers[k];
    pts.push_back({{"x", ojson::array({x[0], x[1], x[2]})}, {"radius", r.radii[k]}, {"cells", r.ball_cells[k]}});
  }
  rep.details = {{"min_ratio", r.min_ratio}, {"verdict", r.verdict}, {"violating", r.violating},
                 {"density", r.rho.describe()}, {"centers", pts}};
  rep.verdict = r.verdict;
  return rep;
}

Report thinness_cmd(const RunConfig& c, bool force) {
  const Section p = c.params();
  const double lambda = p.number("lambda"), beta = p.number("beta"), eps = p.number("epsilon");
  const int d = c.grid.dim();
  const Annulus a = Annulus::make(lambda, beta);
  std::vector<Point> cs;
  if (p.text("centers", "random") == "random")
    cs = random_centers(d, static_cast<std::size_t>(p.integer("count", 100)),
                        p.number("half_width", 2.0 * a.outer()), c.seed);
  else
    cs = centers(c, d, 2.0 * a.outer());
  const auto r = thinness_check(c.grid, lambda, beta, eps, cs, force);
  Report rep;
  for (std::size_t k = 0; k < r.centers.size(); ++k)
    rep.rows.push_back(Row{std::to_string(k), r.ratios[k], eps, eps - r.ratios[k], kNaN, 0});
  rep.details = {{"L", r.L},           {"lambda0", r.lambda0},   {"max_ratio", r.max_ratio},
                 {"argmax", r.argmax}, {"forced", r.forced},     {"verdict", r.verdict},
                 {"annulus_radius", a.radius}, {"annulus_half_width", a.half_width}};
  if (r.forced) rep.warnings.push_back("lambda below lambda_0 of the thinness lemma; run forced");
  rep.verdict = r.verdict;
  return rep;
}

Report duality_cmd(const RunConfig& c) {
  const Section p = c.params();
  const auto r = duality_check(c.density(p.text("rho1")), c.density(p.text("rho2")), p.number("C1"), p.number("C2"),
                               p.number("t_max"), p.integer("samples", 2001));
  Report rep;
  Curve curve{"slack", "t", "C1/rho1(C2/rho2(t)) - t", {}};
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    rep.rows.push_back(Row{fmt(r.t[k]), r.slack[k] + r.t[k], r.t[k], r.slack[k], kNaN, 0});
    curve.points.emplace_back(r.t[k], r.slack[k]);
  }
  rep.curves.push_back(curve);
  rep.details = {{"min_slack", r.min_slack}, {"argmin", r.argmin}, {"verdict", r.verdict}};
  rep.verdict = r.verdict;
  return rep;
}

Report sharpness_cmd(const RunConfig& c) {
  const Section p = c.params();
  const double fraction = p.number("fraction", 0.2);
  const Density& rho = c.density(p.text("density"));
  Report rep;
  Curve curve{"up_ratio", "X", "up_ratio", {}};
  ojson per = ojson::array();
  for (double X : p.list("widths")) {
    const auto sc = sharpness_comb(c.grid, X, fraction, rho);
    const double ratio = up_ratio(sc.f, sc.O, sc.Omega);
    rep.rows.push_back(Row{fmt(X), ratio, X, ratio - X, kNaN, 0});
    curve.points.emplace_back(X, ratio);
    per.push_back({{"width", X}, {"K", sc.K}, {"up_ratio", ratio}});
    rep.extremizer = sc.f;
  }
  rep.curves.push_back(curve);
  rep.details["combs"] = per;
  return rep;
}

void write_diagnostic(const ojson& diag, const std::optional<std::filesystem::path>& dir, const std::string& sub,
                      std::ostream& err) {
  err << diag.dump() << '\n';
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return;
  std::ofstream os(*dir / ((sub.empty() ? std::string("obslab") : sub) + ".diagnostic.json"));
  os << diag.dump(2) << '\n';
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"up-constant", "spectral-scan", "obs-constant", "two-time",
                                              "wwzz",        "resolvent",     "resolvent-scan", "algebra-scan",
                                              "miller",      "heat-obs",      "thickness",    "thinness",
                                              "duality",     "sharpness"};
  return names;
}

Report execute(const std::string& sub, const RunConfig& c, bool force) {
  if (!c.experiment.empty() && c.experiment != sub)
    throw ConfigError("config describes experiment '" + c.experiment + "', not '" + sub + "'");
  Report r;
  if (sub == "up-constant")
    r = up_constant_cmd(c);
  else if (sub == "spectral-scan")
    r = spectral_scan_cmd(c);
  else if (sub == "obs-constant")
    r = obs_constant_cmd(c, false);
  else if (sub == "two-time")
    r = two_time_cmd(c);
  else if (sub == "wwzz")
    r = wwzz_cmd(c);
  else if (sub == "resolvent")
    r = resolvent_cmd(c);
  else if (sub == "resolvent-scan")
    r = resolvent_scan_cmd(c, force);
  else if (sub == "algebra-scan")
    r = algebra_cmd(c);
  else if (sub == "miller")
    r = miller_cmd(c);
  else if (sub == "heat-obs")
    r = obs_constant_cmd(c, true);
  else if (sub == "thickness")
    r = thickness_cmd(c);
  else if (sub == "thinness")
    r = thinness_cmd(c, force);
  else if (sub == "duality")
    r = duality_cmd(c);
  else if (sub == "sharpness")
    r = sharpness_cmd(c);
  else
    throw ConfigError("unknown subcommand '" + sub + "'");
  r.subcommand = sub;
  return r;
}

int run(const std::string& sub, const std::filesystem::path& config_path,
        const std::optional<std::filesystem::path>& out_dir, bool force, std::ostream& out, std::ostream& err) {
  std::optional<std::filesystem::path> dir = out_dir;
  auto fail = [&](ExitCode code, const char* kind, const std::string& msg, ojson extra) {
    ojson diag = {{"status", "error"}, {"exit_code", int(code)}, {"kind", kind}, {"subcommand", sub},
                  {"message", msg}};
    for (auto& [k, v] : extra.items()) diag[k] = v;
    write_diagnostic(diag, dir, sub, err);
    return int(code);
  };
  try {
    const RunConfig c = load_config(config_path);
    if (!dir) dir = c.out_dir;
    const Report r = execute(sub, c, force);
    const auto files = emit_report(r, c, c.formats, *dir);
    out << sub << ": " << r.rows.size() << " row(s), verdict " << (r.verdict ? "true" : "false")
        << ", config_hash " << hex(c.hash) << "\n";
    for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
    for (const auto& f : files) out << "  wrote " << f.string() << "\n";
    return ok;
  } catch (const ConfigError& e) {
    return fail(config_error, "config", e.what(), ojson::object());
  } catch (const PreconditionError& e) {
    return fail(precondition_violation, "precondition", e.what(), {{"threshold", e.threshold()}});
  } catch (const NumericalError& e) {
    return fail(numerical_failure, "numerical", e.what(), {{"trace", e.trace()}});
  } catch (const std::exception& e) {
    // Output-directory and file-system failures land here.
    return fail(config_error, "io", e.what(), ojson::object());
  }
}

}  // namespace obslab::cli
