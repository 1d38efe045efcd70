#include "obslab/uncertainty/uncertainty.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"
#include "obslab/geometry/sets.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

namespace {

void require_masks(const GridSpec& space, const Mask& O, const Mask* Omega) {
  if (!(O.grid() == space.as_space())) throw PreconditionError("observation set must live on the space grid");
  if (Omega != nullptr && !(Omega->grid() == space.as_frequency()))
    throw PreconditionError("frequency set must live on the frequency lattice of the grid");
}

double gaussian_leak(double centre, double half, double width) {
  return 0.5 * (std::erfc((half - centre) / width) + std::erfc((half + centre) / width));
}

}  // namespace

double up_ratio(const Field& f, const Mask& O, const Mask& Omega) {
  require_masks(f.grid(), O, &Omega);
  const double total = f.norm_sq();
  if (!(total > 0.0)) throw PreconditionError("up_ratio needs a nonzero field");
  const auto& k = simd::kernels();
  const auto wO = O.weights();
  const auto wW = Omega.weights();
  const Field F = fourier_forward(f);
  const double den = f.grid().cell_volume() * k.weighted_norm_sq(f.samples().data(), wO.data(), f.size()) +
                     F.grid().cell_volume() * k.weighted_norm_sq(F.samples().data(), wW.data(), F.size());
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return total / den;
}

linalg::LinearMap restriction_operator(const BandSubspace& sub, const Mask& O) {
  require_masks(sub.grid(), O, nullptr);
  auto w = std::make_shared<std::vector<double>>(O.weights());
  auto buf = std::make_shared<std::vector<cplx>>(sub.grid().size());
  return {sub.dim(), [&sub, w, buf](std::span<const cplx> in, std::span<cplx> out) {
            sub.synthesize(in, *buf);
            simd::kernels().scale_real(buf->data(), w->data(), buf->size());
            sub.analyze(*buf, out);
          }};
}

linalg::LinearMap up_operator(const BandSubspace& sub, const Mask& O, const Mask& Omega) {
  require_masks(sub.grid(), O, &Omega);
  auto base = restriction_operator(sub, O);
  // On coefficients, P F^-1 1_Omega F is the diagonal of Omega on the band.
  auto diag = std::make_shared<std::vector<double>>(sub.dim());
  const auto idx = sub.lattice_indices();
  for (std::size_t m = 0; m < idx.size(); ++m) (*diag)[m] = Omega[idx[m]] ? 1.0 : 0.0;
  return {sub.dim(), [base, diag](std::span<const cplx> in, std::span<cplx> out) {
            base.apply(in, out);
            for (std::size_t m = 0; m < out.size(); ++m) out[m] += (*diag)[m] * in[m];
          }};
}

ConstantReport up_constant(const UPInstance& inst, const SolveOptions& opt) {
  const BandSubspace sub(inst.O.grid(), inst.band);
  if (sub.dim() < 2) throw PreconditionError("band-limited subspace must have dimension >= 2");
  auto rep = solve_constant(sub, up_operator(sub, inst.O, inst.Omega), opt);
  rep.parameters = {{"band", inst.band}, {"measure_O", inst.O.measure()}, {"measure_Omega", inst.Omega.measure()}};
  return rep;
}

ConstantReport spectral_constant(const Mask& O, double lambda, const SolveOptions& opt) {
  const BandSubspace sub(O.grid(), lambda);
  auto rep = solve_constant(sub, restriction_operator(sub, O), opt);
  const double c_spec = std::log(rep.constant) / (1.0 + lambda);
  rep.parameters = {{"lambda", lambda}, {"c_spec", c_spec}, {"measure_O", O.measure()}};
  return rep;
}

Field sharpness_packet(const GridSpec& grid, const Point& x0, const Point& xi0, double sigma) {
  if (!(sigma > 0.0)) throw PreconditionError("packet width must be positive");
  const GridSpec g = grid.as_space();
  const int d = g.dim();
  const double half = 0.5 * g.box_len();
  const double nyq = g.nyquist();
  double leak = 0.0;
  for (int a = 0; a < d; ++a) {
    // |f|^2 ~ e^{-(x - x0)^2 / sigma^2},  |f^|^2 ~ e^{-4 pi^2 sigma^2 (xi - xi0)^2}
    leak += gaussian_leak(x0[a], half, sigma);
    leak += gaussian_leak(xi0[a], nyq, 1.0 / (2.0 * std::numbers::pi * sigma));
  }
  if (leak > 1e-10)
    throw PreconditionError("packet is clipped by the box or the frequency band", "packet mass outside <= 1e-10");
  Field f = Field::from_function(g, [&](const Point& x) {
    double r2 = 0.0, ph = 0.0;
    for (int a = 0; a < d; ++a) {
      r2 += (x[a] - x0[a]) * (x[a] - x0[a]);
      ph += xi0[a] * x[a];
    }
    return std::exp(-r2 / (2.0 * sigma * sigma)) * std::polar(1.0, 2.0 * std::numbers::pi * ph);
  });
  f *= 1.0 / std::sqrt(f.norm_sq());
  return f;
}

SharpnessCase sharpness_comb(const GridSpec& grid, double width, double fraction, const Density& rho) {
  const GridSpec g = grid.as_space();
  if (g.dim() != 1) throw PreconditionError("the comb construction is one-dimensional");
  if (!(width > 0.0) || !(fraction > 0.0 && fraction < 1.0))
    throw PreconditionError("comb needs width > 0 and hole fraction in (0, 1)");
  const int K = static_cast<int>(std::ceil(4.0 * width));
  if (K + 1 >= 0.5 * g.box_len() || K + 1 >= g.nyquist())
    throw PreconditionError("comb does not fit the box and the frequency band");
  const auto holes = make_spec(shape::DensityHoles{1.0, K, fraction, rho});
  Mask O = make_set(g, *holes);
  Mask Omega = make_set(g.as_frequency(), *holes);
  const double X2 = width * width;
  Field f = Field::from_function(g, [&](const Point& p) {
    double s = 0.0;
    for (int k = -K; k <= K; ++k) s += std::exp(-std::numbers::pi * k * k / X2 - std::numbers::pi * X2 * (p[0] - k) * (p[0] - k));
    return cplx(s, 0.0);
  });
  f *= 1.0 / std::sqrt(f.norm_sq());
  return {std::move(O), std::move(Omega), std::move(f), width, K, fraction};
}

}  // namespace obslab
