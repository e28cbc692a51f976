#include "qcorr/random.hpp"

#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

ComplexMatrix ginibre(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Fill in a fixed order so output only depends on the engine state.
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

ComplexMatrix normalized_gram(const ComplexMatrix& g) {
  ComplexMatrix m = g * g.adjoint();
  return m / m.trace().real();
}

}  // namespace

DensityMatrix random_density(Rng& rng, int rank) {
  if (rank < 1 || rank > 4) {
    throw Error(Errc::ParamOutOfRange, "rank must be in 1..4, got " + std::to_string(rank));
  }
  return validate_density(normalized_gram(ginibre(rng, 4, rank)));
}

DensityMatrix random_density(std::uint64_t seed, int rank) {
  Rng rng(seed);
  return random_density(rng, rank);
}

Mat2c random_qubit_state(Rng& rng, int rank) {
  if (rank < 1 || rank > 2) {
    throw Error(Errc::ParamOutOfRange, "qubit rank must be 1 or 2, got " + std::to_string(rank));
  }
  return normalized_gram(ginibre(rng, 2, rank));
}

Mat2c random_unitary(Rng& rng) {
  const ComplexMatrix z = ginibre(rng, 2, 2);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases with diag(r) so the distribution is Haar.
  for (int k = 0; k < 2; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

DensityMatrix random_product_state(Rng& rng) {
  std::uniform_int_distribution<int> rank(1, 2);
  const int ra = rank(rng);
  const int rb = rank(rng);
  const Mat2c a = random_qubit_state(rng, ra);
  const Mat2c b = random_qubit_state(rng, rb);
  return validate_density(kron(a, b));
}

DensityMatrix random_classical_quantum(Rng& rng, Side classical_side) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> rank(1, 2);
  const Mat2c basis = random_unitary(rng);
  const double p = unif(rng);
  Mat4c m = Mat4c::Zero();
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector2cd ket = basis.col(k);
    const Mat2c proj = ket * ket.adjoint();
    const Mat2c local = random_qubit_state(rng, rank(rng));
    const double weight = k == 0 ? p : 1.0 - p;
    m += weight * (classical_side == Side::B ? kron(local, proj) : kron(proj, local));
  }
  return validate_density(m);
}

DensityMatrix random_classical_classical(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Mat2c ua = random_unitary(rng);
  const Mat2c ub = random_unitary(rng);
  Eigen::Vector4d w;
  for (int k = 0; k < 4; ++k) w(k) = unif(rng);
  w /= w.sum();
  Mat4c m = Mat4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Eigen::Vector2cd a = ua.col(i);
      const Eigen::Vector2cd b = ub.col(j);
      m += w(2 * i + j) * kron(a * a.adjoint(), b * b.adjoint());
    }
  }
  return validate_density(m);
}

}  // namespace qcorr
