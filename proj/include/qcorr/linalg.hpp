#pragma once

#include "qcorr/types.hpp"

namespace qcorr {

/// Numerical tolerances used when validating states and checking spectra.
struct ToleranceSet {
  double herm = 1e-9;  ///< max |m - m^dagger| entry
  double trace = 1e-9;
  double psd = 1e-10;  ///< eigenvalues down to -psd are accepted
  double eig = 1e-10;
};

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues are in descending order. Each eigenvector column is normalized
/// and phase-fixed so that its first component with modulus above 1e-12 is real
/// and positive, which makes the output deterministic for non-degenerate input.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Largest matrix size accepted by the dense solvers below.
inline constexpr Eigen::Index kMaxSolverDim = 4;

Spectrum hermitian_eigensystem(const ComplexMatrix& m, double herm_tol = ToleranceSet{}.herm);

/// Real symmetric variant; eigenvectors are real, sign-fixed the same way.
struct RealSpectrum {
  Eigen::VectorXd eigenvalues;
  RealMatrix eigenvectors;
};

RealSpectrum symmetric_eigensystem(const RealMatrix& m, double sym_tol = ToleranceSet{}.herm);

struct SvdResult {
  Eigen::VectorXd singular_values;  ///< nonnegative, descending
  RealMatrix u;
  RealMatrix v;
};

/// Thin SVD, m = u * diag(singular_values) * v^T.
SvdResult real_svd(const RealMatrix& m);

/// a (x) b, with a acting on the left factor.
Mat4c kron(const Mat2c& a, const Mat2c& b);

}  // namespace qcorr
