#include "observability/evolver.hpp"

#include "obslab/core/errors.hpp"

namespace obslab::detail {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

TimeStep::TimeStep(const GridSpec& grid, const PropagatorKind& kind, double t) {
  std::visit(overloaded{
                 [&](const propagator::Schrodinger&) {
                   fwd_.emplace(make_multiplier(grid, kind::Schrodinger{t}));
                   bwd_.emplace(make_multiplier(grid, kind::Schrodinger{-t}));
                 },
                 [&](const propagator::Fractional& f) {
                   fwd_.emplace(make_multiplier(grid, kind::Fractional{t, f.s}));
                   bwd_.emplace(make_multiplier(grid, kind::Fractional{-t, f.s}));
                 },
                 [&](const propagator::Heat&) { fwd_.emplace(make_multiplier(grid, kind::Heat{t})); },
                 [&](const propagator::Potential& p) {
                   if (p.n_steps < 1) throw PreconditionError("potential propagator needs n_steps >= 1");
                   require_same_grid(p.V.grid(), grid.as_space(), "potential propagator");
                   require_real_potential(p.V);
                   steps_ = p.n_steps;
                   sfwd_.emplace(grid, p.V.samples(), t / p.n_steps);
                   sbwd_.emplace(grid, p.V.samples(), -t / p.n_steps);
                 },
             },
             kind);
}

void TimeStep::forward(std::span<cplx> buf) const {
  if (sfwd_) {
    sfwd_->advance(buf, steps_);
    return;
  }
  apply_symbol(buf, *fwd_);
}

void TimeStep::adjoint(std::span<cplx> buf) const {
  if (sbwd_) {
    sbwd_->advance(buf, steps_);
    return;
  }
  apply_symbol(buf, bwd_ ? *bwd_ : *fwd_);
}

}  // namespace obslab::detail
