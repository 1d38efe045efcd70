#include "obslab/core/dimension.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "obslab/core/errors.hpp"

namespace obslab {

namespace {

constexpr std::size_t kSamples = 1'000'000;
constexpr int kDeltaSteps = 64;
constexpr std::uint64_t kSeed = 0x5eed'cafe'0b51ULL;

DimensionConstants compute(int d) {
  DimensionConstants c{d, unit_ball_volume(d), 0.0, 0.0};
  const double area = d * c.omega_d;  // sigma(S^{d-1}); counting measure 2 for d = 1

  // Chord distance |omega - e_1| of each sample.
  std::mt19937_64 rng(kSeed + static_cast<std::uint64_t>(d));
  std::normal_distribution<double> gauss;
  std::vector<double> dist(kSamples);
  for (auto& r : dist) {
    std::array<double, 3> v{};
    double nrm = 0.0;
    do {
      nrm = 0.0;
      for (int a = 0; a < d; ++a) {
        v[a] = gauss(rng);
        nrm += v[a] * v[a];
      }
    } while (nrm == 0.0);
    nrm = std::sqrt(nrm);
    double s = 0.0;
    for (int a = 0; a < d; ++a) {
      const double x = v[a] / nrm - (a == 0 ? 1.0 : 0.0);
      s += x * x;
    }
    r = std::sqrt(s);
  }
  std::sort(dist.begin(), dist.end());

  for (int k = 1; k <= kDeltaSteps; ++k) {
    const double delta = 2.0 * k / kDeltaSteps;
    const auto inside = static_cast<double>(std::lower_bound(dist.begin(), dist.end(), delta) - dist.begin());
    const double ratio = area * inside / static_cast<double>(kSamples) / std::pow(delta, d - 1);
    c.cap_const = std::max(c.cap_const, ratio);
  }
  c.cd_prime = c.cap_const * std::pow(2.0, d - 1);
  return c;
}

}  // namespace

double unit_ball_volume(int d) { return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0); }

const DimensionConstants& dimension_constants(int d) {
  if (d < 1 || d > 3) throw PreconditionError("dimension constants are tabulated for d = 1, 2, 3");
  static std::array<std::once_flag, 3> once;
  static std::array<std::optional<DimensionConstants>, 3> table;
  std::call_once(once[d - 1], [d] { table[d - 1] = compute(d); });
  return *table[d - 1];
}

}  // namespace obslab
