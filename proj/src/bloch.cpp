#include "qcorr/bloch.hpp"

namespace qcorr {

const std::array<Mat2c, 4>& pauli_basis() {
  static const std::array<Mat2c, 4> basis = [] {
    const cplx i(0.0, 1.0);
    std::array<Mat2c, 4> p;
    p[0] << 1, 0, 0, 1;
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -i, i, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return basis;
}

Mat2c pauli_dot(const Vec3& n) {
  const auto& p = pauli_basis();
  return n(0) * p[1] + n(1) * p[2] + n(2) * p[3];
}

Vec3 qubit_bloch_vector(const Mat2c& m) {
  const auto& p = pauli_basis();
  Vec3 r;
  for (int i = 0; i < 3; ++i) r(i) = (m * p[i + 1]).trace().real();
  return r;
}

Mat2c qubit_from_bloch(const Vec3& r) { return 0.5 * (pauli_basis()[0] + pauli_dot(r)); }

namespace {

// Tr[m (p_a (x) p_b)] without forming the Kronecker product.
double pauli_coefficient(const Mat4c& m, const Mat2c& pa, const Mat2c& pb) {
  cplx acc = 0.0;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          acc += m(2 * a1 + b1, 2 * a2 + b2) * pa(a2, a1) * pb(b2, b1);
  return acc.real();
}

}  // namespace

BlochForm bloch_decompose(const Mat4c& m) {
  const auto& p = pauli_basis();
  BlochForm b;
  for (int i = 0; i < 3; ++i) {
    b.x(i) = pauli_coefficient(m, p[i + 1], p[0]);
    b.y(i) = pauli_coefficient(m, p[0], p[i + 1]);
    for (int j = 0; j < 3; ++j) b.t(i, j) = pauli_coefficient(m, p[i + 1], p[j + 1]);
  }
  return b;
}

BlochForm bloch_decompose(const DensityMatrix& rho) { return bloch_decompose(rho.matrix()); }

Mat4c bloch_reconstruct(const BlochForm& b) {
  const auto& p = pauli_basis();
  Mat4c m = kron(p[0], p[0]);
  for (int i = 0; i < 3; ++i) {
    m += b.x(i) * kron(p[i + 1], p[0]);
    m += b.y(i) * kron(p[0], p[i + 1]);
    for (int j = 0; j < 3; ++j) m += b.t(i, j) * kron(p[i + 1], p[j + 1]);
  }
  return 0.25 * m;
}

}  // namespace qcorr
