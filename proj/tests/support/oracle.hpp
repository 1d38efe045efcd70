#pragma once

// Test-only reference implementations. Nothing here shares code with the
// FFT/Lanczos path: transforms are explicit O(N^2) Fourier sums and operators
// are assembled as dense matrices from them.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "obslab/core/grid.hpp"
#include "obslab/core/mask.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;

// Direct quadrature of int f(x) e^{-2 i pi x xi} dx at every lattice point.
inline std::vector<cplx> dft_direct(const obslab::GridSpec& g, const std::vector<cplx>& f) {
  const obslab::GridSpec fr = g.as_frequency();
  std::vector<cplx> out(g.size());
  const double dv = g.as_space().cell_volume();
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto xi = fr.point(k);
    cplx acc{};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto x = g.as_space().point(j);
      double ph = 0.0;
      for (int a = 0; a < g.dim(); ++a) ph += x[a] * xi[a];
      acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * ph);
    }
    out[k] = dv * acc;
  }
  return out;
}

// Columns: weighted space samples of the band-limited basis functions
// e_m(x) = dxi^{d/2} e^{2 i pi x xi_m} (times dx^{d/2}), one per lattice point
// with |xi| <= band. Rows index the space grid.
inline MatrixXcd band_basis(const obslab::GridSpec& g, double band) {
  const obslab::GridSpec sp = g.as_space();
  const obslab::GridSpec fr = g.as_frequency();
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < fr.size(); ++k)
    if (obslab::norm(fr.point(k), g.dim()) <= band + 0.0) {
      const auto p = fr.point(k);
      double s = 0.0;
      for (int a = 0; a < g.dim(); ++a) s += p[a] * p[a];
      if (s <= band * band) idx.push_back(k);
    }
  MatrixXcd B(static_cast<Eigen::Index>(sp.size()), static_cast<Eigen::Index>(idx.size()));
  const double scale = std::sqrt(sp.cell_volume() * fr.cell_volume());
  for (std::size_t m = 0; m < idx.size(); ++m) {
    const auto xi = fr.point(idx[m]);
    for (std::size_t j = 0; j < sp.size(); ++j) {
      const auto x = sp.point(j);
      double ph = 0.0;
      for (int a = 0; a < g.dim(); ++a) ph += x[a] * xi[a];
      B(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m)) =
          scale * std::polar(1.0, 2.0 * std::numbers::pi * ph);
    }
  }
  return B;
}

// Full unitary DFT matrix in weighted coordinates (space -> frequency).
inline MatrixXcd unitary_dft(const obslab::GridSpec& g) {
  const obslab::GridSpec sp = g.as_space();
  const obslab::GridSpec fr = g.as_frequency();
  const auto N = static_cast<Eigen::Index>(sp.size());
  MatrixXcd F(N, N);
  const double scale = std::sqrt(sp.cell_volume() * fr.cell_volume());
  for (Eigen::Index k = 0; k < N; ++k) {
    const auto xi = fr.point(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < N; ++j) {
      const auto x = sp.point(static_cast<std::size_t>(j));
      double ph = 0.0;
      for (int a = 0; a < g.dim(); ++a) ph += x[a] * xi[a];
      F(k, j) = scale * std::polar(1.0, -2.0 * std::numbers::pi * ph);
    }
  }
  return F;
}

inline Eigen::VectorXd mask_diag(const obslab::Mask& m) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) d[static_cast<Eigen::Index>(i)] = m[i] ? 1.0 : 0.0;
  return d;
}

inline double smallest_eigenvalue(const MatrixXcd& H) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

}  // namespace oracle

namespace oracle {

// F^H diag(symbol(|xi|^2)) F in weighted space coordinates.
template <class Symbol>
MatrixXcd multiplier_matrix(const obslab::GridSpec& g, Symbol symbol) {
  const MatrixXcd F = unitary_dft(g);
  const obslab::GridSpec fr = g.as_frequency();
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(fr.size()));
  for (std::size_t k = 0; k < fr.size(); ++k) {
    const auto p = fr.point(k);
    double xi2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) xi2 += p[a] * p[a];
    diag[static_cast<Eigen::Index>(k)] = symbol(xi2);
  }
  return F.adjoint() * diag.asDiagonal() * F;
}

inline MatrixXcd schrodinger(const obslab::GridSpec& g, double t) {
  return multiplier_matrix(g, [t](double xi2) {
    return std::polar(1.0, -4.0 * std::numbers::pi * std::numbers::pi * t * xi2);
  });
}

}  // namespace oracle
