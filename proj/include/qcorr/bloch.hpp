#pragma once

#include <array>

#include "qcorr/state.hpp"
#include "qcorr/types.hpp"

namespace qcorr {

/// Pauli expansion of a two-qubit state:
///   rho = 1/4 [ 1(x)1 + sum_i x_i s_i(x)1 + sum_i y_i 1(x)s_i + sum_ij t_ij s_i(x)s_j ]
/// with x_i = Tr[rho (s_i(x)1)], y_i = Tr[rho (1(x)s_i)], t_ij = Tr[rho (s_i(x)s_j)].
struct BlochForm {
  Vec3 x = Vec3::Zero();  ///< Bloch vector of A
  Vec3 y = Vec3::Zero();  ///< Bloch vector of B
  Mat3 t = Mat3::Zero();  ///< correlation tensor, row index on A
};

/// {1, sigma_x, sigma_y, sigma_z}.
const std::array<Mat2c, 4>& pauli_basis();

/// n . sigma
Mat2c pauli_dot(const Vec3& n);

/// Bloch vector of a single-qubit operator: r_i = Tr[m sigma_i].
Vec3 qubit_bloch_vector(const Mat2c& m);

/// (1 + r . sigma) / 2
Mat2c qubit_from_bloch(const Vec3& r);

BlochForm bloch_decompose(const DensityMatrix& rho);
BlochForm bloch_decompose(const Mat4c& m);

/// Inverse of bloch_decompose. The result is Hermitian with unit trace but is
/// not checked for positivity; pass it through validate_density when needed.
Mat4c bloch_reconstruct(const BlochForm& b);

}  // namespace qcorr
