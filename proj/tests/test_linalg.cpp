#include <random>

#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/state.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::test::max_abs_diff;

namespace {

// Characteristic polynomial coefficients c_0..c_n of det(lambda I - m) via
// Faddeev-LeVerrier, with c_n = 1. Independent of any eigensolver.
std::vector<cplx> char_poly(const ComplexMatrix& m) {
  const auto n = m.rows();
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  ComplexMatrix mk = ComplexMatrix::Zero(n, n);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
    c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

cplx eval_poly(const std::vector<cplx>& c, double x) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST_CASE("Pauli Z spectrum") {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const Spectrum s = hermitian_eigensystem(z);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(s.eigenvalues(1) == doctest::Approx(-1.0));
  // Phase convention: first significant component real positive.
  CHECK(s.eigenvectors(0, 0).real() == doctest::Approx(1.0));
  CHECK(s.eigenvectors(1, 1).real() == doctest::Approx(1.0));
}

TEST_CASE("Bell projector has spectrum (1, 0, 0, 0)") {
  const Spectrum s = hermitian_eigensystem(test::bell_phi_plus());
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(s.eigenvalues(k)) < 1e-12);
}

TEST_CASE("sigma eigenvalues are roots of its characteristic polynomial") {
  const ComplexMatrix sigma = sigma_matrix();
  const Spectrum s = hermitian_eigensystem(sigma);
  const auto poly = char_poly(sigma);
  double sum = 0.0;
  for (double lambda : s.eigenvalues) {
    CHECK(lambda >= -1e-12);
    CHECK(std::abs(eval_poly(poly, lambda)) < 1e-13);
    sum += lambda;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  // Product of roots equals the determinant (c_0 for even n).
  CHECK(s.eigenvalues.prod() == doctest::Approx(poly[0].real()).epsilon(1e-10));
  // Descending order.
  for (int k = 0; k + 1 < 4; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k + 1));
}

TEST_CASE("spectral reconstruction for random Hermitian matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 4;
    const ComplexMatrix m = test::random_hermitian(rng, n);
    const Spectrum s = hermitian_eigensystem(m);
    const ComplexMatrix v = s.eigenvectors;
    const ComplexMatrix rebuilt = v * s.eigenvalues.asDiagonal() * v.adjoint();
    REQUIRE(max_abs_diff(rebuilt, m) < 1e-10);
    REQUIRE(max_abs_diff(v.adjoint() * v, ComplexMatrix::Identity(n, n)) < 1e-10);
    for (int k = 0; k < n; ++k) {
      REQUIRE(max_abs_diff(m * v.col(k), s.eigenvalues(k) * v.col(k)) < 1e-10);
    }
  }
}

TEST_CASE("hermitian_eigensystem rejects bad input") {
  ComplexMatrix big = ComplexMatrix::Identity(5, 5);
  CHECK_THROWS_AS(hermitian_eigensystem(big), Error);
  ComplexMatrix nh(2, 2);
  nh << 0, 1, 0, 0;
  try {
    hermitian_eigensystem(nh);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHermitian);
  }
}

TEST_CASE("real SVD examples") {
  RealMatrix d = RealMatrix::Zero(4, 4);
  d(0, 0) = 1;
  d(3, 3) = 1;
  SvdResult s = real_svd(d);
  CHECK(s.singular_values(0) == doctest::Approx(1.0));
  CHECK(s.singular_values(1) == doctest::Approx(1.0));
  CHECK(s.singular_values(2) == 0.0);
  CHECK(s.singular_values(3) == 0.0);

  s = real_svd(RealMatrix::Zero(4, 4));
  CHECK(s.singular_values.isZero(0.0));

  RealMatrix r_sigma(4, 4);
  r_sigma << 1, 0.4, 0, 0, 0.4, 0, 0, 0, 0, 0, 0, 0, -0.4, 0, 0, 0.2;
  s = real_svd(r_sigma);
  int nonzero = 0;
  for (double v : s.singular_values) nonzero += v > 1e-12 ? 1 : 0;
  CHECK(nonzero == 3);
}

TEST_CASE("SVD reconstruction and ordering for random real matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 4;
    const int cols = 1 + (trial / 4) % 4;
    const RealMatrix m = test::random_real(rng, rows, cols);
    const SvdResult s = real_svd(m);
    REQUIRE(max_abs_diff(s.u * s.singular_values.asDiagonal() * s.v.transpose(), m) < 1e-10);
    for (Eigen::Index k = 0; k < s.singular_values.size(); ++k) {
      REQUIRE(s.singular_values(k) >= 0.0);
      if (k > 0) REQUIRE(s.singular_values(k - 1) >= s.singular_values(k));
    }
  }
}

TEST_CASE("symmetric eigensystem sorts descending with sign convention") {
  RealMatrix m(3, 3);
  m << 2, 0, 0, 0, -1, 0, 0, 0, 5;
  const RealSpectrum s = symmetric_eigensystem(m);
  CHECK(s.eigenvalues(0) == doctest::Approx(5));
  CHECK(s.eigenvalues(1) == doctest::Approx(2));
  CHECK(s.eigenvalues(2) == doctest::Approx(-1));
  CHECK(s.eigenvectors(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("kron places the left factor on the outer index") {
  Mat2c a, b;
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const Mat4c k = kron(a, b);
  CHECK(k(0, 1) == cplx(1));
  CHECK(k(1, 0) == cplx(1));
  CHECK(k(2, 3) == cplx(4));
  CHECK(k(0, 3) == cplx(2));
}
