#include "obslab/observability/gramian.hpp"

#include <memory>
#include <vector>

#include "obslab/core/errors.hpp"
#include "obslab/core/multiplier.hpp"
#include "obslab/simd/kernels.hpp"
#include "observability/evolver.hpp"

namespace obslab {

void validate(const GramianSpec& spec) {
  if (!(spec.T > 0.0)) throw PreconditionError("observation horizon T must be positive");
  if (spec.n_t < 4) throw PreconditionError("time quadrature needs n_t >= 4");
  if (spec.O.grid().is_frequency()) throw PreconditionError("observation set must live on the space grid");
}

linalg::LinearMap gramian_operator(const BandSubspace& sub, const GramianSpec& spec) {
  validate(spec);
  require_same_grid(spec.O.grid(), sub.grid(), "gramian");
  const double dt = spec.T / spec.n_t;
  const int nt = spec.n_t;
  const std::size_t N = sub.grid().size();
  struct State {
    detail::TimeStep step;
    detail::TimeStep half;
    std::vector<double> w;
    std::vector<cplx> u;
    std::vector<cplx> acc;
    std::vector<cplx> history;  // 1_O u_j, j = 0 .. nt - 1
  };
  auto st = std::make_shared<State>(State{detail::TimeStep(sub.grid(), spec.kind, dt),
                                          detail::TimeStep(sub.grid(), spec.kind, 0.5 * dt), spec.O.weights(),
                                          std::vector<cplx>(N), std::vector<cplx>(N),
                                          std::vector<cplx>(N * static_cast<std::size_t>(nt))});
  return {sub.dim(), [&sub, st, nt, dt, N](std::span<const cplx> in, std::span<cplx> out) {
            const auto& k = simd::kernels();
            std::span<cplx> u(st->u);
            std::span<cplx> acc(st->acc);
            sub.synthesize(in, u);
            st->half.forward(u);
            for (int j = 0; j < nt; ++j) {
              if (j > 0) st->step.forward(u);
              cplx* h = st->history.data() + static_cast<std::size_t>(j) * N;
              std::copy(u.begin(), u.end(), h);
              k.scale_real(h, st->w.data(), N);
            }
            // Horner: acc_j = 1_O u_j + U(-dt) acc_{j+1}
            const cplx* last = st->history.data() + static_cast<std::size_t>(nt - 1) * N;
            std::copy(last, last + N, acc.begin());
            for (int j = nt - 2; j >= 0; --j) {
              st->step.adjoint(acc);
              k.axpy(cplx{1.0, 0.0}, st->history.data() + static_cast<std::size_t>(j) * N, acc.data(), N);
            }
            st->half.adjoint(acc);
            for (auto& v : acc) v *= dt;
            sub.analyze(acc, out);
          }};
}

Field gramian_apply(const Field& f, const GramianSpec& spec) {
  const BandSubspace sub(spec.O.grid(), spec.band);
  const auto op = gramian_operator(sub, spec);
  const auto c = sub.project(f);
  std::vector<cplx> out(sub.dim());
  op.apply(c, out);
  return sub.to_field(out);
}

ConstantReport obs_constant(const GramianSpec& spec, const SolveOptions& opt) {
  const BandSubspace sub(spec.O.grid(), spec.band);
  auto rep = solve_constant(sub, gramian_operator(sub, spec), opt);
  rep.parameters = {{"T", spec.T}, {"n_t", static_cast<double>(spec.n_t)}, {"band", spec.band},
                    {"measure_O", spec.O.measure()}};
  return rep;
}

ConstantReport two_time_constant(const Mask& O1, const Mask& O2, double T, double S, double band,
                                 const SolveOptions& opt) {
  if (!(T > S && S >= 0.0)) throw PreconditionError("two-time estimate needs T > S >= 0", "T > S >= 0");
  require_same_grid(O1.grid(), O2.grid(), "two_time_constant");
  if (O1.grid().is_frequency()) throw PreconditionError("observation sets must live on the space grid");
  const BandSubspace sub(O1.grid(), band);
  const GridSpec& g = sub.grid();
  struct State {
    Multiplier fT, bT, fS, bS;
    std::vector<double> w1, w2;
    std::vector<cplx> a, b;
  };
  auto st = std::make_shared<State>(State{make_multiplier(g, kind::Schrodinger{T}),
                                          make_multiplier(g, kind::Schrodinger{-T}),
                                          make_multiplier(g, kind::Schrodinger{S}),
                                          make_multiplier(g, kind::Schrodinger{-S}), O1.weights(), O2.weights(),
                                          std::vector<cplx>(g.size()), std::vector<cplx>(g.size())});
  linalg::LinearMap op{sub.dim(), [&sub, st](std::span<const cplx> in, std::span<cplx> out) {
                         const auto& k = simd::kernels();
                         sub.synthesize(in, st->a);
                         st->b = st->a;
                         apply_symbol(st->a, st->fT);
                         k.scale_real(st->a.data(), st->w1.data(), st->a.size());
                         apply_symbol(st->a, st->bT);
                         apply_symbol(st->b, st->fS);
                         k.scale_real(st->b.data(), st->w2.data(), st->b.size());
                         apply_symbol(st->b, st->bS);
                         k.axpy(cplx{1.0, 0.0}, st->b.data(), st->a.data(), st->a.size());
                         sub.analyze(st->a, out);
                       }};
  auto rep = solve_constant(sub, op, opt);
  rep.parameters = {{"T", T}, {"S", S}, {"band", band}, {"measure_O1", O1.measure()}, {"measure_O2", O2.measure()}};
  return rep;
}

ConstantReport heat_obs_constant(const Mask& O, double T, int n_t, double band, const SolveOptions& opt) {
  return obs_constant(GramianSpec{O, T, n_t, propagator::Heat{}, band}, opt);
}

}  // namespace obslab
