#pragma once

// Dense symmetric eigenvalues by cyclic Jacobi rotations, and Laplacian
// spectra built on top of them.

#include <cstddef>

#include "gmv/graph.hpp"
#include "gmv/partition.hpp"

namespace gmv {

/// Real symmetric matrix. Construction rejects asymmetry above 1e-12.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(RealMatrix m);
  static SymMatrix from_int(const IntMatrix& m);

  std::size_t order() const noexcept { return m_.rows; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const RealMatrix& matrix() const noexcept { return m_; }

  double trace() const;
  double frobenius_norm() const;

private:
  RealMatrix m_;
};

struct Spectrum {
  RealSeq values;         // non-increasing
  double residual = 0.0;  // max over eigenpairs of |Mv - lambda v|_inf
};

/// Eigenvalues sorted non-increasing. Sweeps until the off-diagonal
/// Frobenius norm drops below 1e-12 * max(1, |M|_F).
Spectrum eigenvalues_sym(const SymMatrix& m);

/// Eigenvalues of a PSD matrix with |lambda| <= 1e-9 * max(1, |M|_F)
/// snapped to exactly zero.
Spectrum psd_spectrum(const SymMatrix& m);

Spectrum laplacian_spectrum(const Graph& g);

/// Second smallest Laplacian eigenvalue. Throws for n < 2.
double algebraic_connectivity(const Graph& g);

}  // namespace gmv
