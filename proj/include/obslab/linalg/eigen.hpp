#pragma once

// Smallest eigenpair of a Hermitian operator given only by its action.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace obslab::linalg {

using cplx = std::complex<double>;

struct LinearMap {
  std::size_t dim = 0;
  // out = A in; in and out never alias.
  std::function<void(std::span<const cplx> in, std::span<cplx> out)> apply;
};

enum class SolverMethod { automatic, lanczos, dense };

struct EigenOptions {
  double tol = 1e-8;  // on ||A u - theta u|| / ||A||
  SolverMethod method = SolverMethod::automatic;
  std::size_t dense_limit = 512;  // automatic picks dense at or below this
  int krylov_dim = 96;
  int keep = 32;
  int max_matvecs = 50000;
  std::uint64_t seed = 0x1a2b3c4dULL;
};

struct EigenResult {
  double value = 0.0;
  std::vector<cplx> vector;  // unit norm
  double residual = 0.0;     // ||A u - theta u|| / ||A||_est
  double norm_estimate = 0.0;
  int iterations = 0;         // operator applications
  std::vector<double> trace;  // residual after each restart
  std::string method;
};

// Throws NumericalError (with the residual trace) when max_matvecs is hit.
EigenResult smallest_eigenpair(const LinearMap& A, const EigenOptions& opt = {});

// Dense matrix of A, column by column.
Eigen::MatrixXcd assemble(const LinearMap& A);

}  // namespace obslab::linalg
