#include "obslab/linalg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "obslab/core/errors.hpp"

namespace obslab::linalg {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

VectorXcd apply_op(const LinearMap& A, const VectorXcd& x) {
  VectorXcd y(static_cast<Eigen::Index>(A.dim));
  A.apply(std::span<const cplx>(x.data(), A.dim), std::span<cplx>(y.data(), A.dim));
  return y;
}

VectorXcd random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  VectorXcd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(g(rng), g(rng));
  return v;
}

// Classical Gram-Schmidt applied twice against the first k columns of V.
double orthogonalize(const MatrixXcd& V, Eigen::Index k, VectorXcd& w) {
  for (int pass = 0; pass < 2; ++pass) {
    if (k == 0) break;
    const VectorXcd c = V.leftCols(k).adjoint() * w;
    w.noalias() -= V.leftCols(k) * c;
  }
  return w.norm();
}

EigenResult dense_solve(const LinearMap& A) {
  const MatrixXcd M = assemble(A);
  const MatrixXcd H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
  if (es.info() != Eigen::Success) throw NumericalError("dense Hermitian eigensolver failed");
  EigenResult r;
  r.method = "dense";
  r.value = es.eigenvalues()[0];
  const VectorXcd u = es.eigenvectors().col(0);
  r.vector.assign(u.data(), u.data() + u.size());
  r.norm_estimate = std::max(std::fabs(es.eigenvalues()[0]), std::fabs(es.eigenvalues()[es.eigenvalues().size() - 1]));
  const VectorXcd res = M * u - r.value * u;
  r.residual = r.norm_estimate > 0.0 ? res.norm() / r.norm_estimate : res.norm();
  r.iterations = static_cast<int>(A.dim);
  r.trace.push_back(r.residual);
  return r;
}

EigenResult lanczos_solve(const LinearMap& A, const EigenOptions& opt) {
  const auto n = static_cast<Eigen::Index>(A.dim);
  const Eigen::Index m = std::min<Eigen::Index>(std::max(opt.krylov_dim, 4), n);
  const Eigen::Index keep = std::clamp<Eigen::Index>(opt.keep, 1, std::max<Eigen::Index>(m - 2, 1));
  std::mt19937_64 rng(opt.seed);

  MatrixXcd V(n, m);
  MatrixXcd W(n, m);
  VectorXcd v = random_vector(A.dim, rng);
  v.normalize();
  Eigen::Index k = 0;  // columns currently filled
  EigenResult r;
  r.method = "lanczos";
  double norm_est = 0.0;

  for (;;) {
    // Extend the basis to m columns.
    while (k < m) {
      V.col(k) = v;
      W.col(k) = apply_op(A, v);
      ++r.iterations;
      norm_est = std::max(norm_est, W.col(k).norm());
      if (k + 1 == m) {
        ++k;
        break;
      }
      VectorXcd w = W.col(k);
      double nw = orthogonalize(V, k + 1, w);
      if (nw <= 1e-12 * norm_est || !std::isfinite(nw)) {
        // Invariant subspace: continue with a fresh direction.
        w = random_vector(A.dim, rng);
        nw = orthogonalize(V, k + 1, w);
      }
      v = w / nw;
      ++k;
    }

    // Rayleigh-Ritz on span(V).
    MatrixXcd H = V.adjoint() * W;
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("projected eigenproblem failed", r.trace);
    const auto& theta = es.eigenvalues();
    norm_est = std::max({norm_est, std::fabs(theta[0]), std::fabs(theta[m - 1])});

    const VectorXcd y = es.eigenvectors().col(0);
    const VectorXcd u = V * y;
    const VectorXcd Au = W * y;
    VectorXcd res = Au - theta[0] * u;
    const double rel = norm_est > 0.0 ? res.norm() / norm_est : res.norm();
    r.trace.push_back(rel);

    if (rel <= opt.tol || m == n) {
      r.value = theta[0];
      r.vector.assign(u.data(), u.data() + u.size());
      r.norm_estimate = norm_est;
      // Report the residual of the returned vector, recomputed afresh.
      const VectorXcd Au2 = apply_op(A, u);
      ++r.iterations;
      r.residual = (Au2 - theta[0] * u).norm() / (norm_est > 0.0 ? norm_est : 1.0);
      if (r.residual <= opt.tol || m == n) return r;
    }
    if (r.iterations >= opt.max_matvecs)
      throw NumericalError("Lanczos did not reach residual " + std::to_string(opt.tol) + " within " +
                               std::to_string(opt.max_matvecs) + " operator applications",
                           r.trace);

    // Thick restart: keep the `keep` lowest Ritz pairs, continue along the
    // residual of the lowest one.
    const MatrixXcd Y = es.eigenvectors().leftCols(keep);
    const MatrixXcd Vk = V * Y;
    const MatrixXcd Wk = W * Y;
    V.leftCols(keep) = Vk;
    W.leftCols(keep) = Wk;
    k = keep;
    double nr = orthogonalize(V, k, res);
    if (!(nr > 1e-14 * norm_est)) {
      res = random_vector(A.dim, rng);
      nr = orthogonalize(V, k, res);
    }
    v = res / nr;
  }
}

}  // namespace

Eigen::MatrixXcd assemble(const LinearMap& A) {
  const auto n = static_cast<Eigen::Index>(A.dim);
  Eigen::MatrixXcd M(n, n);
  VectorXcd e = VectorXcd::Zero(n);
  VectorXcd col(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e[j] = 1.0;
    A.apply(std::span<const cplx>(e.data(), A.dim), std::span<cplx>(col.data(), A.dim));
    M.col(j) = col;
    e[j] = 0.0;
  }
  return M;
}

EigenResult smallest_eigenpair(const LinearMap& A, const EigenOptions& opt) {
  if (A.dim == 0 || !A.apply) throw PreconditionError("eigensolver needs a nonempty operator");
  const bool dense = opt.method == SolverMethod::dense ||
                     (opt.method == SolverMethod::automatic && A.dim <= opt.dense_limit);
  if (dense) return dense_solve(A);
  return lanczos_solve(A, opt);
}

}  // namespace obslab::linalg
