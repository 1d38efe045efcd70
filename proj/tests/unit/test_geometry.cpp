#include <doctest.h>

#include <cmath>
#include <random>

#include "obslab/core/errors.hpp"
#include "obslab/geometry/annulus.hpp"
#include "obslab/geometry/lemmas.hpp"
#include "obslab/geometry/sets.hpp"
#include "obslab/geometry/thickness.hpp"

using namespace obslab;

TEST_CASE("densities") {
  const auto p1 = Density::power_capped(1.0);
  CHECK(p1(2.0) == 0.5);
  CHECK(p1(0.5) == 1.0);
  CHECK(p1(1.0) == 1.0);
  const auto s = Density::scaled_power(3.0, 1.0);
  CHECK(s(9.0) == doctest::Approx(1.0));
  CHECK(s(1.0) == 3.0);
  CHECK_THROWS_AS(Density::constant(0.0), PreconditionError);
  CHECK(p1.scaled(3.0)(4.0) == doctest::Approx(0.75));
  CHECK(p1.dilated(2.0)(4.0) == doctest::Approx(2.0 * 0.5));
  const auto c = Density::custom({0.0, 1.0, 2.0}, {1.0, 0.5, 0.25});
  CHECK(c(0.5) == doctest::Approx(0.75));
  CHECK(c(10.0) == 0.25);
  CHECK_THROWS_AS(Density::custom({0.0, 1.0}, {1.0, 5.0}, 1.0), PreconditionError);
}

TEST_CASE("make_set measures") {
  const auto g = make_grid(1, 1024, 32.0);
  const Mask full = make_set(g, *make_spec(shape::Full{}));
  CHECK(full.measure() == 32.0);
  const Mask slab = make_set(g, *make_spec(shape::PeriodicSlab{1.0, 0.3}));
  CHECK(std::fabs(slab.measure() - 0.3 * 32) <= 2 * g.spacing() * 32);
  CHECK(slab.measure() + slab.complement().measure() == doctest::Approx(32.0).epsilon(1e-15));

  const auto base = make_spec(shape::PeriodicSlab{1.0, 0.3});
  const Mask dil = make_set(g, *make_spec(shape::Dilation{2.0, base}));
  const Mask ref = make_set(g, *make_spec(shape::PeriodicSlab{2.0, 0.3}));
  std::size_t diff = 0;
  for (std::size_t i = 0; i < g.size(); ++i) diff += dil[i] != ref[i];
  CHECK(diff <= 32);  // at most one cell per slab edge

  const auto g2 = make_grid(2, 64, 8.0);
  CHECK_THROWS_AS(make_set(g, *make_spec(shape::HyperbolaComplement{1.0})), PreconditionError);
  CHECK_NOTHROW(make_set(g2, *make_spec(shape::HyperbolaComplement{1.0})));
  CHECK_THROWS_AS(make_set(g, *make_spec(shape::Dilation{0.0, base})), PreconditionError);
}

TEST_CASE("thickness check basics") {
  const auto g = make_grid(2, 256, 32.0);
  const Mask full = make_set(g, *make_spec(shape::Full{}));
  const auto centers = lattice_centers(2, 2.0, 12.0);
  const auto rho = Density::power_capped(1.0);
  const auto rep = thickness_check(full, 0.9, rho, centers);
  CHECK(rep.verdict);
  CHECK(rep.min_ratio == 1.0);

  // complement duality and monotonicity
  const Mask slab = make_set(g, *make_spec(shape::PeriodicSlab{1.0, 0.4}));
  const Mask more = slab | make_set(g, *make_spec(shape::PeriodicSlab{0.7, 0.2, 1}));
  const auto a = thickness_check(slab, 0.0, rho, centers);
  const auto b = thickness_check(slab.complement(), 0.0, rho, centers);
  const auto c = thickness_check(more, 0.0, rho, centers);
  for (std::size_t k = 0; k < centers.size(); ++k) {
    CHECK(a.ratios[k] + b.ratios[k] == doctest::Approx(1.0));
    CHECK(c.ratios[k] >= a.ratios[k]);
  }
  CHECK_THROWS_AS(thickness_check(full, 0.5, Density::constant(9.0), centers), PreconditionError);
}

TEST_CASE("periodized balls wrap around the box") {
  const auto g = make_grid(1, 64, 8.0);
  std::vector<std::uint8_t> bits(64, 0);
  bits[0] = bits[1] = 1;  // x = -4, -3.875
  const Mask m(g, bits);
  const Point edge{3.9, 0.0, 0.0};
  const auto rep = thickness_check(m, 0.0, Density::constant(0.3), std::vector<Point>{edge});
  // ball [3.6, 4.2] holds cells 3.625 .. 4.125 -> 5 cells, two of them wrapped
  CHECK(rep.ball_cells[0] == 5);
  CHECK(rep.ratios[0] == doctest::Approx(2.0 / 5.0));
}

TEST_CASE("counterexample sets") {
  const auto g = make_grid(1, 8192, 64.0);
  const Mask blc = make_set(g, *make_spec(shape::BallLatticeComplement{}));
  std::vector<Point> xk;
  for (int k : {2, 3, 4}) xk.push_back({std::ldexp(1.0, k), 0.0, 0.0});
  const auto rep = thickness_check(blc, 0.05, Density::power_capped(1.0), xk);
  CHECK_FALSE(rep.verdict);
  for (double r : rep.ratios) CHECK(r < 0.05);
}

TEST_CASE("annulus") {
  const auto g = make_grid(1, 256, 16.0);
  const Mask a = annulus_mask(g, 4.0, 1.0);
  const GridSpec f = g.as_frequency();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = std::fabs(f.point(i)[0]);
    CHECK(a[i] == (x >= 1.5 && x <= 2.5));
  }
  CHECK(annulus_mask(g, 16.0, 1.0, 2.0) == annulus_mask(g, 4.0, 1.0));
  CHECK_THROWS_AS(annulus_mask(g, 64.0 * 64.0, 1.0), PreconditionError);
}

TEST_CASE("thinness: implicit counting agrees with the materialized annulus") {
  const auto g = make_grid(2, 512, 8.0);  // lattice spacing 1/8, Nyquist 32
  const double lam = 400.0, beta = 0.4, eps = 1.5;  // large eps keeps L, and the balls, small
  const auto centers = random_centers(2, 40, 25.0, 9);
  const auto rep = thinness_check(g, lam, beta, eps, centers, true);
  const Mask comp = annulus_mask(g, lam, beta).complement();
  const auto thick = thickness_check(comp, 0.0, Density::scaled_power(rep.L, beta), centers);
  for (std::size_t k = 0; k < centers.size(); ++k) {
    CHECK(rep.ball_cells[k] == thick.ball_cells[k]);
    CHECK(rep.ratios[k] == doctest::Approx(1.0 - thick.ratios[k]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(thinness_check(g, lam, beta, 0.25, centers), PreconditionError);
}

TEST_CASE("density upgrade and duality") {
  const auto up = density_upgrade(0.9, Density::constant(1.0), Density::constant(1.0), 1);
  CHECK(up.gamma == doctest::Approx(0.1));
  CHECK(up.rho(5.0) == doctest::Approx(3.0));
  CHECK(density_upgrade(0.81, Density::constant(1.0), Density::constant(1.0), 2).gamma == doctest::Approx(0.01));
  CHECK_NOTHROW(density_upgrade(0.5, Density::power_capped(2.0), Density::power_capped(1.0), 1));
  CHECK_THROWS_AS(density_upgrade(0.5, Density::power_capped(1.0), Density::power_capped(2.0), 1), PreconditionError);

  const auto p1 = Density::power_capped(1.0);
  auto r = duality_check(p1, p1, 1.0, 1.0, 100.0);
  CHECK(r.verdict);
  CHECK(std::fabs(r.min_slack) <= 1e-9);
  r = duality_check(Density::power_capped(2.0), Density::power_capped(0.5), 1.0, 1.0, 1e3);
  CHECK(r.verdict);
  r = duality_check(Density::constant(1.0), Density::constant(1.0), 1.0, 1.0, 10.0);
  CHECK_FALSE(r.verdict);
}
