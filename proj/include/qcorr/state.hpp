#pragma once

#include <string_view>

#include "qcorr/linalg.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// A validated two-qubit state: 4x4, Hermitian, unit trace, positive semidefinite.
///
/// Instances only come out of validate_density(), so holding one is proof that
/// the invariants were checked against some ToleranceSet.
class DensityMatrix {
 public:
  const Mat4c& matrix() const noexcept { return mat_; }
  cplx operator()(int row, int col) const { return mat_(row, col); }

 private:
  explicit DensityMatrix(const Mat4c& m) : mat_(m) {}
  friend DensityMatrix validate_density(const ComplexMatrix& m, const ToleranceSet& tol);

  Mat4c mat_;
};

/// Checks shape, Hermiticity, trace and positivity. A Hermiticity deviation
/// below tol.herm is removed by symmetrizing (m + m^dagger)/2.
DensityMatrix validate_density(const ComplexMatrix& m, const ToleranceSet& tol = {});

/// Reduced state of the kept subsystem.
Mat2c partial_trace(const DensityMatrix& rho, Side keep);
Mat2c partial_trace(const Mat4c& m, Side keep);

/// Von Neumann entropy in bits, with 0 log 0 = 0.
double von_neumann_entropy(const ComplexMatrix& m, const ToleranceSet& tol = {});

/// Entropy (bits) of a qubit whose Bloch vector has length r.
double qubit_entropy_from_bloch_length(double r);

/// Binary Shannon entropy h(p) in bits.
double binary_entropy(double p);

enum class ReferenceState { RhoCl, RhoTilde, Sigma, BellPhiPlus, ProductPlus };

/// Named states from the worked examples:
///   rho_cl        (|00><00| + |11><11|)/2
///   rho_tilde     (|00><00| + |++><++|)/2
///   sigma         the L_R = 3, L_T = 1 counterexample
///   bell_phi_plus |Phi+><Phi+|
///   product_plus  |++><++|
DensityMatrix reference_state(ReferenceState which);
DensityMatrix reference_state(std::string_view name);
const char* to_string(ReferenceState which);

/// The raw sigma matrix exactly as printed.
Mat4c sigma_matrix();

/// |psi><psi| for a (not necessarily normalized) two-qubit vector.
Mat4c projector(const Eigen::Vector4cd& psi);

}  // namespace qcorr
