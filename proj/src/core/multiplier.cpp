#include "obslab/core/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Shared by the Schrodinger and fractional kinds so s = 1 reproduces the
// Schrodinger symbol bit for bit: pow(q, 1.0) == q.
cplx unit_phase(double t, double q) { return std::polar(1.0, -t * q); }

}  // namespace

std::string describe(const MultiplierKind& k) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const kind::Schrodinger& v) { os << "schrodinger(t=" << v.t << ")"; },
                 [&](const kind::Fractional& v) { os << "fractional(t=" << v.t << ", s=" << v.s << ")"; },
                 [&](const kind::Heat& v) { os << "heat(t=" << v.t << ")"; },
                 [&](const kind::ResolventDefect& v) { os << "resolvent_defect(lambda=" << v.lambda << ")"; },
                 [&](const kind::LaplacianShift& v) { os << "laplacian_shift(lambda=" << v.lambda << ")"; },
                 [&](const kind::ProjectorBall& v) { os << "projector_ball(radius=" << v.radius << ")"; },
                 [&](const kind::ProjectorMask& v) { os << "projector_mask(cells=" << v.mask.count() << ")"; },
             },
             k);
  return os.str();
}

Multiplier make_multiplier(const GridSpec& grid, MultiplierKind k) {
  const GridSpec space = grid.as_space();
  const std::vector<double>& xi2 = squared_frequencies(space);
  std::vector<cplx> sym(xi2.size());

  std::visit(overloaded{
                 [&](const kind::Schrodinger& v) {
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = unit_phase(v.t, kFourPiSq * xi2[i]);
                 },
                 [&](const kind::Fractional& v) {
                   if (!(v.s > 0.5)) throw PreconditionError("fractional order s must exceed 1/2");
                   for (std::size_t i = 0; i < sym.size(); ++i)
                     sym[i] = unit_phase(v.t, std::pow(kFourPiSq * xi2[i], v.s));
                 },
                 [&](const kind::Heat& v) {
                   if (!(v.t >= 0.0)) throw PreconditionError("heat multiplier needs t >= 0");
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = std::exp(-kFourPiSq * v.t * xi2[i]);
                 },
                 [&](const kind::ResolventDefect& v) {
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = kFourPiSq * xi2[i] - v.lambda;
                 },
                 [&](const kind::LaplacianShift& v) {
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = kFourPiSq * xi2[i] + v.lambda;
                 },
                 [&](const kind::ProjectorBall& v) {
                   if (!(v.radius >= 0.0) || v.radius >= space.nyquist())
                     throw PreconditionError("projector radius must lie in [0, Nyquist)", "radius < n/(2L)");
                   const double r2 = v.radius * v.radius;
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = xi2[i] <= r2 ? 1.0 : 0.0;
                 },
                 [&](const kind::ProjectorMask& v) {
                   if (!(v.mask.grid() == space.as_frequency()))
                     throw PreconditionError("projector mask must live on the frequency lattice of the grid");
                   for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = v.mask[i] ? 1.0 : 0.0;
                 },
             },
             k);
  return Multiplier(space, std::move(k), std::move(sym));
}

void apply_symbol(std::span<cplx> weighted, const Multiplier& m) {
  const GridSpec& g = m.grid();
  if (weighted.size() != g.size()) throw PreconditionError("buffer length does not match multiplier grid");
  unitary_forward(g.dim(), g.n(), weighted);
  simd::kernels().scale_complex(weighted.data(), m.symbol().data(), weighted.size());
  unitary_inverse(g.dim(), g.n(), weighted);
}

Field apply_multiplier(const Field& f, const Multiplier& m) {
  require_same_grid(f.grid(), m.grid(), "apply_multiplier");
  Field out = f;
  apply_symbol(out.samples(), m);
  return out;
}

}  // namespace obslab
