#include "obslab/uncertainty/report.hpp"

#include <cmath>

namespace obslab {

ConstantReport solve_constant(const BandSubspace& sub, const linalg::LinearMap& op, const SolveOptions& opt) {
  const linalg::EigenResult r = linalg::smallest_eigenpair(op, opt);
  ConstantReport rep{.extremizer = sub.to_field(r.vector)};
  rep.lambda_min = r.value;
  const double scale = std::max(1.0, r.norm_estimate);
  rep.constant = r.value <= kKernelThreshold * scale ? std::numeric_limits<double>::infinity() : 1.0 / r.value;
  rep.eigen_residual = r.residual;
  rep.iterations = r.iterations;
  rep.trace = r.trace;
  rep.method = r.method;
  rep.band = sub.band();
  rep.subspace_dim = sub.dim();
  return rep;
}

}  // namespace obslab
