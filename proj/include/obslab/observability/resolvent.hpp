#pragma once

#include <string>
#include <vector>

#include "obslab/core/grid.hpp"
#include "obslab/core/mask.hpp"
#include "obslab/uncertainty/report.hpp"

namespace obslab {

// ||f||^2 <= M ||D f||^2 + m ||f||^2_O  on the band subspace, with
//   D = (-Delta)^s - lambda + V.
// V may be null; an identically zero V is the same as none.
struct ResolventProblem {
  Mask O;
  double lambda = 0.0;
  double band = 1.0;
  double s = 1.0;
  const Field* V = nullptr;
};

// Minimal m at fixed M: 1 / lambda_min(M D*D + 1_O). +inf when that operator
// has a kernel on the subspace.
ConstantReport resolvent_min_constant(const ResolventProblem& p, double M, const SolveOptions& opt = {});

struct MinimalM {
  double M = 0.0;
  double m = 0.0;
  double slack = 0.0;  // lambda_min of the scaled feasibility form at M, >= 0
  int evaluations = 0;
  double lo = 0.0;  // last infeasible M (0 when M = 0 is feasible)
};

// Smallest M (to relative width 1e-10) with M D*D + 1_O >= 1/m, by bisection
// on log M. The returned M is always on the feasible side.
MinimalM resolvent_minimal_M(const ResolventProblem& p, double m, const SolveOptions& opt = {});

// (3^{2 + 1/alpha} cd' / ((1 - gamma) omega_d) + 1)^{2s}
double resolvent_lambda0(int d, double alpha, double gamma, double s);

// Smallest lambda' >= lambda with (4 pi^2 |xi|^2)^s = lambda' for a point xi
// of the grid's frequency lattice, so that D keeps a kernel as it does on R^d.
double lattice_shell_at_least(const GridSpec& grid, double lambda, double s);

// Power of lambda in the reference law: -(1 - 1/alpha) at s = 1 and
// -(2 - 1/s - 1/(alpha s)) in general.
double resolvent_reference_exponent(double alpha, double s);

struct ScalingSpec {
  Mask O;
  double alpha = 2.0;
  double s = 1.0;
  double gamma = 0.3;
  std::vector<double> lambdas;  // strictly increasing
  double m_fixed = 1.0;
  double band = 1.0;
  bool force = false;  // allow lambdas below lambda_0
};

struct ScalingReport {
  std::vector<double> lambdas;
  std::vector<double> M;
  std::vector<double> reference;  // c lambda^exponent
  double exponent = 0.0;
  double prefactor = 0.0;
  double lambda0 = 0.0;
  double m_fixed = 0.0;
  double thickness_min_ratio = 0.0;
  bool forced = false;
  bool verdict = false;  // M(lambda) <= c lambda^exponent for every lambda
  std::vector<std::string> warnings;
};

ScalingReport resolvent_scaling_fit(const ScalingSpec& spec, const SolveOptions& opt = {});

}  // namespace obslab
