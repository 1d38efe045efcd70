#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "obslab/core/errors.hpp"
#include "obslab/geometry/sets.hpp"
#include "obslab/observability/algebra.hpp"
#include "obslab/observability/gramian.hpp"
#include "obslab/observability/majorant.hpp"
#include "obslab/observability/miller.hpp"
#include "obslab/observability/resolvent.hpp"
#include "obslab/observability/wwzz.hpp"
#include "obslab/uncertainty/uncertainty.hpp"
#include "support/oracle.hpp"

using namespace obslab;
using oracle::MatrixXcd;

namespace {

constexpr double kPi = std::numbers::pi;

const GridSpec g64 = make_grid(1, 64, 8.0);

Mask random_mask(const GridSpec& g, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution b(p);
  std::vector<std::uint8_t> bits(g.size());
  for (auto& x : bits) x = b(rng) ? 1 : 0;
  return Mask(g, bits);
}

Field random_band_field(const BandSubspace& sub, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  std::vector<cplx> c(sub.dim());
  for (auto& v : c) v = {n(rng), n(rng)};
  return sub.to_field(c);
}

SolveOptions lanczos() {
  SolveOptions o;
  o.method = linalg::SolverMethod::lanczos;
  o.tol = 1e-11;
  return o;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("gramian: unitarity, hermitian, PSD") {
  std::mt19937_64 rng(7);
  const Mask full = Mask::filled(g64, true);
  const BandSubspace sub(g64, 2.5);
  const Field f = random_band_field(sub, rng);
  const Field Gf = gramian_apply(f, GramianSpec{full, 0.7, 16, propagator::Schrodinger{}, 2.5});
  CHECK(relative_distance(Gf, [&] { Field t = f; t *= 0.7; return t; }()) <= 1e-11);

  const Mask O = random_mask(g64, rng, 0.4);
  const GramianSpec spec{O, 0.5, 16, propagator::Schrodinger{}, 2.5};
  const Field g = random_band_field(sub, rng);
  const cplx a = inner(gramian_apply(f, spec), g);
  const cplx b = std::conj(inner(gramian_apply(g, spec), f));
  CHECK(std::abs(a - b) <= 1e-11 * std::abs(a));
  CHECK(inner(f, gramian_apply(f, spec)).real() >= -1e-12 * f.norm_sq());
}

TEST_CASE("gramian: dense oracle and quadrature") {
  std::mt19937_64 rng(11);
  const double band = 2.5;
  const MatrixXcd B = oracle::band_basis(g64, band);
  for (int inst = 0; inst < 3; ++inst) {
    const Mask O = random_mask(g64, rng, 0.3);
    const double T = 0.2 + 0.3 * inst;
    const int nt = 8;
    MatrixXcd G = MatrixXcd::Zero(64, 64);
    for (int j = 0; j < nt; ++j) {
      const MatrixXcd U = oracle::schrodinger(g64, (j + 0.5) * T / nt);
      G += (T / nt) * U.adjoint() * oracle::mask_diag(O).asDiagonal() * U;
    }
    const double lo = oracle::smallest_eigenvalue(B.adjoint() * G * B);
    const auto rep = obs_constant(GramianSpec{O, T, nt, propagator::Schrodinger{}, band}, lanczos());
    CHECK(rel(rep.constant, 1.0 / lo) <= 1e-8);
  }
  const Mask O = random_mask(g64, rng, 0.5);
  const Field f = random_band_field(BandSubspace(g64, band), rng);
  const double q1 = inner(f, gramian_apply(f, GramianSpec{O, 0.5, 64, propagator::Schrodinger{}, band})).real();
  const double q2 = inner(f, gramian_apply(f, GramianSpec{O, 0.5, 128, propagator::Schrodinger{}, band})).real();
  CHECK(rel(q1, q2) <= 1e-3);
}

TEST_CASE("gramian: obs constant properties") {
  std::mt19937_64 rng(3);
  const Mask full = Mask::filled(g64, true);
  CHECK(rel(obs_constant(GramianSpec{full, 0.4, 8, propagator::Schrodinger{}, 2.5}).constant, 2.5) <= 1e-9);
  const Mask O = make_set(g64, *make_spec(shape::PeriodicSlab{1.0, 0.4}));
  const double c1 = obs_constant(GramianSpec{O, 0.2, 32, propagator::Schrodinger{}, 2.5}).constant;
  const double c2 = obs_constant(GramianSpec{O, 0.4, 32, propagator::Schrodinger{}, 2.5}).constant;
  CHECK(c2 <= c1 * (1 + 1e-8));
  const double cf = obs_constant(GramianSpec{O, 0.4, 32, propagator::Fractional{1.0}, 2.5}).constant;
  CHECK(rel(cf, c2) <= 1e-11);
  // enlarging O never increases the constant
  const Mask bigger = O | random_mask(g64, rng, 0.2);
  CHECK(obs_constant(GramianSpec{bigger, 0.4, 32, propagator::Schrodinger{}, 2.5}).constant <= c2 * (1 + 1e-8));
  CHECK_THROWS_AS(validate(GramianSpec{O, 0.0, 32, propagator::Schrodinger{}, 2.5}), PreconditionError);
  CHECK_THROWS_AS(validate(GramianSpec{O, 1.0, 2, propagator::Schrodinger{}, 2.5}), PreconditionError);
  CHECK_THROWS_AS(obs_constant(GramianSpec{O, 1.0, 8, propagator::Schrodinger{}, 4.5}), PreconditionError);
}

TEST_CASE("gramian: potential propagator") {
  const Mask O = make_set(g64, *make_spec(shape::PeriodicSlab{1.0, 0.4}));
  const Field zero(g64);
  const double a = obs_constant(GramianSpec{O, 0.3, 16, propagator::Schrodinger{}, 2.0}).constant;
  const double b = obs_constant(GramianSpec{O, 0.3, 16, propagator::Potential{zero, 4}, 2.0}).constant;
  CHECK(rel(b, a) <= 1e-11);
  // Constant potential only changes a global phase.
  const Field V = Field::from_function(g64, [](const Point&) { return cplx{3.0, 0.0}; });
  const double c = obs_constant(GramianSpec{O, 0.3, 16, propagator::Potential{V, 4}, 2.0}).constant;
  CHECK(rel(c, a) <= 1e-10);
}

TEST_CASE("heat gramian") {
  const Mask full = Mask::filled(g64, true);
  const double T = 0.05, band = 2.0;
  const int nt = 16;
  // Diagonal: worst frequency is the largest lattice |xi| <= band.
  const double xi = std::floor(band * 8.0) / 8.0;
  double q = 0.0;
  for (int j = 0; j < nt; ++j) q += (T / nt) * std::exp(-8.0 * kPi * kPi * (j + 0.5) * T / nt * xi * xi);
  CHECK(rel(heat_obs_constant(full, T, nt, band).constant, 1.0 / q) <= 1e-9);
  const Mask O = make_set(g64, *make_spec(shape::PeriodicSlab{1.0, 0.5}));
  const double h1 = heat_obs_constant(O, 0.02, nt, 2.0).constant;
  const double h2 = heat_obs_constant(O, 0.04, nt, 2.0).constant;
  const double h3 = heat_obs_constant(O, 0.02, nt, 3.0).constant;
  CHECK(h2 <= h1 * (1 + 1e-8));
  CHECK(h3 >= h1 * (1 - 1e-8));
}

TEST_CASE("two-time constant") {
  std::mt19937_64 rng(5);
  const Mask full = Mask::filled(g64, true);
  const Mask empty = Mask::filled(g64, false);
  CHECK(rel(two_time_constant(full, empty, 0.5, 0.1, 2.5).constant, 1.0) <= 1e-12);
  const Mask O1 = random_mask(g64, rng, 0.3), O2 = random_mask(g64, rng, 0.3);
  const double a = two_time_constant(O1, O2, 0.5, 0.1, 2.5).constant;
  CHECK(std::isfinite(a));
  const MatrixXcd B = oracle::band_basis(g64, 2.5);
  const MatrixXcd U1 = oracle::schrodinger(g64, 0.5), U2 = oracle::schrodinger(g64, 0.1);
  const MatrixXcd H = U1.adjoint() * oracle::mask_diag(O1).asDiagonal() * U1 +
                      U2.adjoint() * oracle::mask_diag(O2).asDiagonal() * U2;
  CHECK(rel(two_time_constant(O1, O2, 0.5, 0.1, 2.5, lanczos()).constant,
            1.0 / oracle::smallest_eigenvalue(B.adjoint() * H * B)) <= 1e-8);
  CHECK_THROWS_AS(two_time_constant(O1, O2, 0.1, 0.5, 2.5), PreconditionError);
}

TEST_CASE("wwzz trivial cases") {
  const auto g = make_grid(1, 256, 32.0);
  const Mask A = make_set(g, *make_spec(shape::PeriodicSlab{1.0, 0.4}));
  const auto r1 = wwzz_check(A, SetSpec{shape::Full{}}, 0.25, 2.0);
  CHECK(rel(r1.up.constant, 1.0) <= 1e-9);
  CHECK(rel(r1.two.constant, 1.0) <= 1e-9);
  const auto r2 = wwzz_check(Mask::filled(g, true), SetSpec{shape::PeriodicSlab{1.0, 0.4}}, 0.25, 2.0);
  CHECK(r2.up.constant <= 1.0 + 1e-9);
  CHECK(rel(r2.up.constant, r2.two.constant) <= 1e-9);
  CHECK_THROWS_AS(wwzz_check(A, SetSpec{shape::Full{}}, 1.0, 3.0), PreconditionError);
}

TEST_CASE("resolvent constant") {
  std::mt19937_64 rng(19);
  const double band = 2.5;
  const Mask full = Mask::filled(g64, true);
  // lambda = 4 pi^2 sits on the lattice (xi = 1), so D has a kernel there.
  CHECK(rel(resolvent_min_constant({full, 4 * kPi * kPi, band}, 0.7).constant, 1.0) <= 1e-12);
  CHECK(rel(resolvent_min_constant({full, 30.0, band}, 0.0).constant, 1.0) <= 1e-12);
  CHECK(resolvent_min_constant({full, 30.0, band}, 0.7).constant < 1.0);
  const Mask O = make_set(g64, *make_spec(shape::PeriodicSlab{1.0, 0.4}));
  CHECK(resolvent_min_constant({O, 30.0, band}, 0.0).unbounded());

  const MatrixXcd B = oracle::band_basis(g64, band);
  const Field V = Field::from_function(g64, [](const Point& x) { return cplx{2.0 * std::cos(kPi * x[0] / 4), 0.0}; });
  for (int inst = 0; inst < 3; ++inst) {
    const Mask Oi = random_mask(g64, rng, 0.3);
    const double lambda = 20.0 + 40.0 * inst, M = 1e-3 * (inst + 1);
    const MatrixXcd D = oracle::multiplier_matrix(g64, [&](double xi2) { return cplx{4 * kPi * kPi * xi2 - lambda, 0}; });
    Eigen::VectorXcd v(64);
    for (int i = 0; i < 64; ++i) v[i] = V[static_cast<std::size_t>(i)];
    const MatrixXcd DV = D + MatrixXcd(v.asDiagonal());
    const MatrixXcd Od = oracle::mask_diag(Oi).asDiagonal();
    const double ref0 = 1.0 / oracle::smallest_eigenvalue(B.adjoint() * (M * D * D + Od) * B);
    const double refV = 1.0 / oracle::smallest_eigenvalue(B.adjoint() * (M * DV * DV + Od) * B);
    CHECK(rel(resolvent_min_constant({Oi, lambda, band}, M, lanczos()).constant, ref0) <= 1e-8);
    CHECK(rel(resolvent_min_constant({Oi, lambda, band, 1.0, &V}, M, lanczos()).constant, refV) <= 1e-8);
  }
  const Field zero(g64);
  const auto a = resolvent_min_constant({O, 50.0, band}, 1e-2);
  const auto b = resolvent_min_constant({O, 50.0, band, 1.0, &zero}, 1e-2);
  CHECK(a.constant == b.constant);
  CHECK_THROWS_AS(resolvent_min_constant({O, 50.0, band}, -1.0), PreconditionError);
}

TEST_CASE("minimal M by bisection") {
  const double band = 2.5, lambda = 60.0;
  const Mask O = make_set(g64, *make_spec(shape::PeriodicSlab{1.0, 0.5}));
  const ResolventProblem p{O, lambda, band};
  const double m = 4.0;
  const auto r = resolvent_minimal_M(p, m);
  REQUIRE(r.M > 0.0);
  CHECK(r.slack >= 0.0);
  // At M the minimal m is at most the fixed m, and just below M it exceeds it.
  CHECK(resolvent_min_constant(p, r.M).constant <= m * (1 + 1e-9));
  CHECK(resolvent_min_constant(p, r.M * (1 - 1e-6)).constant > m);
  const auto z = resolvent_minimal_M({Mask::filled(g64, true), lambda, band}, 1.0);
  CHECK(z.M == 0.0);
}

TEST_CASE("resolvent reference law") {
  CHECK(resolvent_reference_exponent(1.0, 1.0) == 0.0);
  CHECK(resolvent_reference_exponent(2.0, 1.0) == -0.5);
  CHECK(resolvent_reference_exponent(1.0 / 3.0, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(resolvent_lambda0(1, 2.0, 0.3, 1.0) > 1.0);
  CHECK(resolvent_lambda0(1, 1.0 / 3.0, 0.3, 2.0) > resolvent_lambda0(1, 1.0 / 3.0, 0.3, 1.0));
}

TEST_CASE("algebra scan") {
  // s = 2, D = 1 on the grid {0, 3} x {0, 4}: the admissible points are
  // (3, 0) with ratio 9 and (0, 4) with ratio 4 / sqrt 5.
  const auto r = algebra_scan(2.0, 1.0, 3.0, 4.0, 1);
  CHECK(r.admissible == 2);
  CHECK(r.inf_ratio == doctest::Approx(4.0 / std::sqrt(5.0)).epsilon(1e-15));
  CHECK(r.argmin_tau == 0.0);
  CHECK(r.argmin_lambda == 4.0);
  CHECK(std::fabs(9.0 - 4.0) / std::sqrt(5.0) == doctest::Approx(2.2360679775));
  const auto s1 = algebra_scan(1.0, 0.5, 50.0, 50.0, 300);
  CHECK(s1.inf_ratio > 1.0);
  const auto s2 = algebra_scan(2.0, 1.0, 100.0, 100.0, 400);
  CHECK(s2.inf_ratio >= 0.5);
  CHECK_THROWS_AS(algebra_scan(2.0, 1e6, 1.0, 1.0, 4), PreconditionError);
}

TEST_CASE("miller probe") {
  const Mask full = Mask::filled(g64, true);
  const auto rep = miller_probe(GramianSpec{full, 1.0, 8, propagator::Schrodinger{}, 2.0}, 0.0, 1.0,
                                {0.5, 1.0, 2.0}, 10.0, 100.0);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    CHECK(rel(row.constant, 1.0 / row.T) <= 1e-9);
    CHECK(rel(row.bound_shape, 1.0 / row.T) <= 1e-14);
  }
  CHECK(rep.verdict);
  const auto below = miller_probe(GramianSpec{full, 1.0, 8, propagator::Schrodinger{}, 2.0}, 1.0, 1.0, {1.0}, 0, 0);
  CHECK(below.rows[0].below_threshold);
  CHECK(std::isnan(below.rows[0].bound_shape));
}

TEST_CASE("affine majorant") {
  const std::vector<double> x{0, 1, 2, 3}, y{0, 2, 1, 3};
  const auto m = tightest_affine_majorant(x, y);
  REQUIRE(m.exists);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(m.intercept + m.slope * x[i] >= y[i] - 1e-12);
  // Through (1, 2) and (3, 3).
  CHECK(m.slope == doctest::Approx(0.5));
  CHECK(m.intercept == doctest::Approx(1.5));
  const std::vector<double> down{3, 2, 1, 0};
  CHECK(tightest_affine_majorant(x, down).slope == 0.0);
  const std::vector<double> bad{0, INFINITY, 1, 2};
  CHECK_FALSE(tightest_affine_majorant(x, bad).exists);
}
