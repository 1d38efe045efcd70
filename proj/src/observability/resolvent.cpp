#include "obslab/observability/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>

#include "obslab/core/dimension.hpp"
#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"
#include "obslab/core/propagate.hpp"
#include "obslab/geometry/density.hpp"
#include "obslab/geometry/thickness.hpp"
#include "obslab/simd/kernels.hpp"
#include "obslab/uncertainty/uncertainty.hpp"

namespace obslab {

namespace {

constexpr double kFourPi2 = 4.0 * std::numbers::pi * std::numbers::pi;

double defect(double xi2, double s, double lambda) { return std::pow(kFourPi2 * xi2, s) - lambda; }

const Field* effective_potential(const ResolventProblem& p) {
  if (p.V == nullptr) return nullptr;
  require_same_grid(p.V->grid(), p.O.grid(), "resolvent potential");
  require_real_potential(*p.V);
  for (const cplx& v : p.V->samples())
    if (v != cplx{}) return p.V;
  return nullptr;
}

void check_problem(const ResolventProblem& p) {
  if (p.O.grid().is_frequency()) throw PreconditionError("observation set must live on the space grid");
  if (!std::isfinite(p.lambda)) throw PreconditionError("lambda must be finite");
  if (!(p.s > 0.5)) throw PreconditionError("resolvent order needs s > 1/2");
}

// Symbol of D on the band, one entry per coefficient.
std::vector<double> band_defect(const BandSubspace& sub, double s, double lambda) {
  const auto xi2 = sub.squared_frequencies();
  std::vector<double> d(xi2.size());
  for (std::size_t m = 0; m < d.size(); ++m) d[m] = defect(xi2[m], s, lambda);
  return d;
}

// f -> P (M D*D f) on the band. Diagonal without a potential; with one, D is
// applied twice on the full grid so that D f keeps its out-of-band part.
linalg::LinearMap defect_form(const BandSubspace& sub, const ResolventProblem& p, const Field* V, double M) {
  if (V == nullptr) {
    auto diag = std::make_shared<std::vector<double>>(band_defect(sub, p.s, p.lambda));
    for (double& v : *diag) v = M * v * v;
    return {sub.dim(), [diag](std::span<const cplx> in, std::span<cplx> out) {
              for (std::size_t m = 0; m < in.size(); ++m) out[m] = (*diag)[m] * in[m];
            }};
  }
  const GridSpec& g = sub.grid();
  struct State {
    std::vector<double> symbol;
    std::vector<double> v;
    std::vector<cplx> u, w;
  };
  auto st = std::make_shared<State>();
  const auto& xi2 = squared_frequencies(g);
  st->symbol.resize(xi2.size());
  for (std::size_t i = 0; i < xi2.size(); ++i) st->symbol[i] = defect(xi2[i], p.s, p.lambda);
  st->v.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) st->v[i] = V->samples()[i].real();
  st->u.resize(g.size());
  st->w.resize(g.size());
  const int d = g.dim();
  const int n = g.n();
  return {sub.dim(), [&sub, st, d, n, M](std::span<const cplx> in, std::span<cplx> out) {
            const auto& k = simd::kernels();
            std::span<cplx> u(st->u);
            sub.synthesize(in, u);
            for (int rep = 0; rep < 2; ++rep) {
              st->w = st->u;
              unitary_forward(d, n, u);
              k.scale_real(u.data(), st->symbol.data(), u.size());
              unitary_inverse(d, n, u);
              k.scale_real(st->w.data(), st->v.data(), u.size());
              k.axpy(cplx{1.0, 0.0}, st->w.data(), u.data(), u.size());
            }
            for (auto& x : u) x *= M;
            sub.analyze(u, out);
          }};
}

linalg::LinearMap sum(linalg::LinearMap a, linalg::LinearMap b, double shift) {
  auto tmp = std::make_shared<std::vector<cplx>>(a.dim);
  return {a.dim, [a, b, tmp, shift](std::span<const cplx> in, std::span<cplx> out) {
            a.apply(in, out);
            b.apply(in, *tmp);
            for (std::size_t m = 0; m < out.size(); ++m) out[m] += (*tmp)[m] + shift * in[m];
          }};
}

}  // namespace

ConstantReport resolvent_min_constant(const ResolventProblem& p, double M, const SolveOptions& opt) {
  check_problem(p);
  if (!(M >= 0.0) || !std::isfinite(M)) throw PreconditionError("resolvent weight M must be finite and >= 0");
  const Field* V = effective_potential(p);
  const BandSubspace sub(p.O.grid(), p.band);
  const auto A = sum(defect_form(sub, p, V, M), restriction_operator(sub, p.O), 0.0);
  const auto d = band_defect(sub, p.s, p.lambda);
  std::vector<double> inv_sqrt(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) inv_sqrt[i] = 1.0 / std::sqrt(M * d[i] * d[i] + 1.0);

  // M D*D spans many decades, so lambda_min(A) is found as the root of the
  // concave decreasing map mu -> lambda_min(P^{-1/2} (A - mu) P^{-1/2}) with
  // P = M d^2 + 1. Newton from mu = 0 approaches it monotonically from below;
  // the derivative is -|P^{-1/2} v|^2.
  auto shifted = [&](double mu) {
    auto w = std::make_shared<std::vector<double>>(inv_sqrt);
    auto buf = std::make_shared<std::vector<cplx>>(sub.dim());
    return linalg::LinearMap{sub.dim(), [A, w, buf, mu](std::span<const cplx> in, std::span<cplx> out) {
                               for (std::size_t i = 0; i < in.size(); ++i) (*buf)[i] = (*w)[i] * in[i];
                               A.apply(*buf, out);
                               for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*w)[i] * (out[i] - mu * (*buf)[i]);
                             }};
  };
  double mu = 0.0;
  linalg::EigenResult r;
  std::vector<double> trace;
  int iterations = 0;
  std::vector<cplx> u(sub.dim());
  for (int step = 0;; ++step) {
    r = linalg::smallest_eigenpair(shifted(mu), opt);
    iterations += r.iterations;
    trace.push_back(r.value);
    double q = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = inv_sqrt[i] * r.vector[i];
      q += std::norm(u[i]);
    }
    const double next = mu + r.value / q;
    const bool done = std::fabs(next - mu) <= 1e-13 * std::max(std::fabs(next), 1e-300) ||
                      std::fabs(r.value) <= 1e-15 * std::max(1.0, r.norm_estimate);
    mu = next;
    if (done) break;
    if (step == 60) throw NumericalError("Newton iteration for lambda_min did not settle", trace);
  }
  const double nu = std::sqrt(std::accumulate(u.begin(), u.end(), 0.0, [](double a, cplx z) { return a + std::norm(z); }));
  for (auto& z : u) z /= nu;

  ConstantReport rep{.extremizer = sub.to_field(u)};
  rep.lambda_min = mu;
  // Kernel test on the scale of the congruent form, whose norm is O(1)
  // whatever M d^2 is.
  const double scale = std::max(1.0, r.norm_estimate);
  rep.constant = mu <= kKernelThreshold * scale ? std::numeric_limits<double>::infinity() : 1.0 / mu;
  std::vector<cplx> Au(sub.dim());
  A.apply(u, Au);
  double res = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) res += std::norm(Au[i] - mu * u[i]);
  rep.eigen_residual = std::sqrt(res) / std::max(mu, 1e-300);
  rep.iterations = iterations;
  rep.trace = std::move(trace);
  rep.method = r.method + "+congruence";
  rep.band = sub.band();
  rep.subspace_dim = sub.dim();
  rep.parameters = {{"lambda", p.lambda}, {"M", M}, {"s", p.s}, {"band", p.band},
                    {"potential", V != nullptr ? 1.0 : 0.0}};
  return rep;
}

MinimalM resolvent_minimal_M(const ResolventProblem& p, double m, const SolveOptions& opt) {
  check_problem(p);
  if (!(m > 0.0) || !std::isfinite(m)) throw PreconditionError("fixed m must be finite and positive");
  const Field* V = effective_potential(p);
  const BandSubspace sub(p.O.grid(), p.band);
  const auto d = band_defect(sub, p.s, p.lambda);
  auto base = restriction_operator(sub, p.O);

  MinimalM out{.m = m};
  // Feasible iff M D*D + 1_O - 1/m >= 0. Tested after the congruence
  // P^{-1/2} (.) P^{-1/2}, P = M d^2 + 1, which keeps the sign of lambda_min
  // and the spectrum bounded as M grows.
  auto slack = [&](double M) {
    ++out.evaluations;
    auto inv_sqrt = std::make_shared<std::vector<double>>(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) (*inv_sqrt)[i] = 1.0 / std::sqrt(M * d[i] * d[i] + 1.0);
    auto inner = sum(defect_form(sub, p, V, M), base, -1.0 / m);
    auto buf = std::make_shared<std::vector<cplx>>(sub.dim());
    linalg::LinearMap op{sub.dim(), [inner, inv_sqrt, buf](std::span<const cplx> in, std::span<cplx> o) {
                           for (std::size_t i = 0; i < in.size(); ++i) (*buf)[i] = (*inv_sqrt)[i] * in[i];
                           inner.apply(*buf, o);
                           for (std::size_t i = 0; i < o.size(); ++i) o[i] *= (*inv_sqrt)[i];
                         }};
    const auto r = linalg::smallest_eigenpair(op, opt);
    // Certified when the Ritz value clears its own residual, up to rounding
    // on the scale of the (bounded) scaled form.
    const double scale = std::max(1.0, r.norm_estimate);
    return r.value - r.residual * r.norm_estimate + 1e-12 * scale;
  };

  const double s0 = slack(0.0);
  if (s0 >= 0.0) {
    out.M = 0.0;
    out.slack = s0;
    return out;
  }
  double lo = 1e-8, hi = 1e8;
  double s_hi = slack(hi);
  while (s_hi < 0.0) {
    lo = hi;
    hi *= 1e4;
    if (hi > 1e40)
      throw NumericalError("no M <= 1e40 satisfies the resolvent estimate with m = " + std::to_string(m));
    s_hi = slack(hi);
  }
  if (lo == 1e-8) {
    while (slack(lo) >= 0.0) {
      hi = lo;
      lo *= 1e-4;
      if (lo < 1e-40) {
        out.M = hi;
        out.slack = slack(hi);
        return out;
      }
    }
    s_hi = slack(hi);
  }
  for (int it = 0; it < 40 && hi / lo - 1.0 > 1e-10; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double sm = slack(mid);
    if (sm >= 0.0) {
      hi = mid;
      s_hi = sm;
    } else {
      lo = mid;
    }
  }
  out.M = hi;
  out.slack = s_hi;
  out.lo = lo;
  return out;
}

double resolvent_lambda0(int d, double alpha, double gamma, double s) {
  if (!(alpha > 0.0) || !(gamma > 0.0 && gamma < 1.0) || !(s > 0.5))
    throw PreconditionError("lambda_0 needs alpha > 0, gamma in (0, 1), s > 1/2");
  const auto& c = dimension_constants(d);
  return std::pow(std::pow(3.0, 2.0 + 1.0 / alpha) * c.cd_prime / ((1.0 - gamma) * c.omega_d) + 1.0, 2.0 * s);
}

double lattice_shell_at_least(const GridSpec& grid, double lambda, double s) {
  if (!(s > 0.5) || !(lambda >= 0.0)) throw PreconditionError("lattice shell needs s > 1/2 and lambda >= 0");
  const double L = grid.box_len();
  // |xi|^2 = N / L^2 with N a sum of d squares.
  const double target = std::pow(lambda, 1.0 / s) / kFourPi2 * L * L;
  auto is_square = [](long long r) {
    const auto b = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(r))));
    return b * b == r;
  };
  auto representable = [&, d = grid.dim()](long long N) {
    if (d == 1) return is_square(N);
    if (d == 3) {
      while (N > 0 && N % 4 == 0) N /= 4;
      return N % 8 != 7;
    }
    for (long long a = 0; a * a <= N; ++a)
      if (is_square(N - a * a)) return true;
    return false;
  };
  for (auto N = std::max(0LL, static_cast<long long>(std::ceil(target - 1e-9)));; ++N) {
    if (representable(N)) {
      const double xi = std::sqrt(static_cast<double>(N)) / L;
      if (xi >= grid.nyquist()) throw PreconditionError("lattice shell beyond the Nyquist frequency");
      return std::pow(kFourPi2 * xi * xi, s);
    }
  }
}

double resolvent_reference_exponent(double alpha, double s) {
  if (s == 1.0) return -(1.0 - 1.0 / alpha);
  return -(2.0 - 1.0 / s - 1.0 / (alpha * s));
}

ScalingReport resolvent_scaling_fit(const ScalingSpec& spec, const SolveOptions& opt) {
  if (spec.lambdas.empty()) throw PreconditionError("scaling fit needs at least one lambda");
  for (std::size_t i = 1; i < spec.lambdas.size(); ++i)
    if (!(spec.lambdas[i] > spec.lambdas[i - 1])) throw PreconditionError("lambda list must be strictly increasing");
  const int d = spec.O.grid().dim();
  ScalingReport rep;
  rep.lambdas = spec.lambdas;
  rep.exponent = resolvent_reference_exponent(spec.alpha, spec.s);
  rep.lambda0 = resolvent_lambda0(d, spec.alpha, spec.gamma, spec.s);
  rep.m_fixed = spec.m_fixed;
  rep.forced = spec.force;
  if (spec.lambdas.front() < rep.lambda0) {
    if (!spec.force)
      throw PreconditionError("smallest lambda " + std::to_string(spec.lambdas.front()) + " is below lambda_0 = " +
                                  std::to_string(rep.lambda0),
                              "lambda >= lambda_0 = (3^{2+1/alpha} cd' / ((1 - gamma) omega_d) + 1)^{2s}");
    rep.warnings.push_back("lambda list starts below lambda_0 (forced)");
  }

  // Thickness against rho_alpha on the unit lattice away from the box edge.
  const double half = 0.5 * spec.O.grid().box_len() - 1.0;
  if (half > 0.0) {
    const auto centers = lattice_centers(d, 1.0, half);
    const auto th = thickness_check(spec.O, spec.gamma, Density::power_capped(spec.alpha), centers);
    rep.thickness_min_ratio = th.min_ratio;
    if (!th.verdict) rep.warnings.push_back("O is not (gamma, rho_alpha)-thick at the sampled centres");
  }

  for (double lambda : spec.lambdas) {
    ResolventProblem p{spec.O, lambda, spec.band, spec.s, nullptr};
    try {
      const auto r = resolvent_minimal_M(p, spec.m_fixed, opt);
      if (!(r.M > 0.0))
        rep.warnings.push_back("M = 0 already suffices at lambda = " + std::to_string(lambda));
      rep.M.push_back(r.M);
    } catch (const NumericalError& e) {
      throw NumericalError("lambda = " + std::to_string(lambda) + ": " + e.what(), e.trace());
    } catch (const PreconditionError& e) {
      throw PreconditionError("lambda = " + std::to_string(lambda) + ": " + e.what(), e.threshold());
    }
  }
  rep.prefactor = rep.M.front() / std::pow(rep.lambdas.front(), rep.exponent);
  rep.verdict = true;
  for (std::size_t i = 0; i < rep.lambdas.size(); ++i) {
    rep.reference.push_back(rep.prefactor * std::pow(rep.lambdas[i], rep.exponent));
    if (rep.M[i] > rep.reference[i] * (1.0 + 1e-9)) rep.verdict = false;
  }
  return rep;
}

}  // namespace obslab
