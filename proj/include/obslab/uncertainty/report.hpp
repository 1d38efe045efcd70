#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "obslab/core/field.hpp"
#include "obslab/core/subspace.hpp"
#include "obslab/linalg/eigen.hpp"

namespace obslab {

// One measured extremal constant: 1 / lambda_min of a Hermitian PSD operator
// on a band-limited subspace.
struct ConstantReport {
  double constant = 0.0;  // +inf when lambda_min is numerically zero
  double lambda_min = 0.0;
  Field extremizer;  // unit norm
  double eigen_residual = 0.0;
  int iterations = 0;
  std::vector<double> trace{};
  std::string method{};
  double band = 0.0;
  std::size_t subspace_dim = 0;
  std::vector<std::pair<std::string, double>> parameters{};

  bool unbounded() const noexcept { return constant == std::numeric_limits<double>::infinity(); }
};

using SolveOptions = linalg::EigenOptions;

// lambda_min <= this * ||A|| counts as a kernel.
inline constexpr double kKernelThreshold = 1e-14;

// Smallest eigenpair of `op` on `sub`, packaged as a report.
ConstantReport solve_constant(const BandSubspace& sub, const linalg::LinearMap& op, const SolveOptions& opt);

}  // namespace obslab
