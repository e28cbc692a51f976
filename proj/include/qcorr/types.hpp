#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcorr {

using cplx = std::complex<double>;

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Dense complex matrix of arbitrary shape (row/column counts carried by Eigen).
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// One half of the bipartition. Basis ordering is |00>,|01>,|10>,|11> with A
/// the left tensor factor.
enum class Side { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

/// Subsystem dimension; everything in this library is two-qubit.
inline constexpr int kQubitDim = 2;
inline constexpr int kMinDim = 2;

}  // namespace qcorr
