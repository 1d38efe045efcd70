#include "obslab/observability/wwzz.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "obslab/core/errors.hpp"
#include "obslab/uncertainty/uncertainty.hpp"

namespace obslab {

WwzzReport wwzz_check(const Mask& A, const SetSpec& B, double T, double band, const SolveOptions& opt) {
  if (!(T > 0.0)) throw PreconditionError("wwzz_check needs T > 0");
  const GridSpec g = A.grid();
  if (g.is_frequency()) throw PreconditionError("A must live on the space grid");
  const double r = 4.0 * std::numbers::pi * T;
  if (!(r * band < 0.5 * g.box_len()))
    throw PreconditionError("dilated frequency set is clipped by the box: 4 pi T band = " + std::to_string(r * band),
                            "4 pi T band < box_len / 2");
  const Mask Omega = make_set(g.as_frequency(), B);
  const Mask dilated = make_set(g, SetSpec{shape::Dilation{r, std::make_shared<const SetSpec>(B)}});

  // 1_A + U(-T) 1_{rB} U(T) is the two-time operator with S = 0.
  WwzzReport rep{up_constant(UPInstance{A, Omega, band}, opt), two_time_constant(dilated, A, T, 0.0, band, opt)};
  rep.dilation = r;
  const double c1 = rep.up.constant;
  const double c2 = rep.two.constant;
  if (std::isinf(c1) && std::isinf(c2))
    rep.gap = 0.0;
  else
    rep.gap = std::fabs(c1 - c2) / std::max(c1, c2);
  return rep;
}

}  // namespace obslab
