#include "qcorr/bloch.hpp"
#include "qcorr/error.hpp"
#include "qcorr/random.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::test::max_abs_diff;

TEST_CASE("Bloch form of rho_cl") {
  const BlochForm b = bloch_decompose(reference_state(ReferenceState::RhoCl));
  CHECK(b.x.norm() < 1e-15);
  CHECK(b.y.norm() < 1e-15);
  Mat3 expected = Mat3::Zero();
  expected(2, 2) = 1.0;
  CHECK(max_abs_diff(b.t, expected) < 1e-15);
}

TEST_CASE("Bloch form of rho_tilde") {
  const BlochForm b = bloch_decompose(reference_state(ReferenceState::RhoTilde));
  const Vec3 half(0.5, 0.0, 0.5);
  CHECK(max_abs_diff(b.x, half) < 1e-15);
  CHECK(max_abs_diff(b.y, half) < 1e-15);
  CHECK(max_abs_diff(b.t, Mat3(half.asDiagonal())) < 1e-15);
}

TEST_CASE("Bloch form of sigma") {
  const BlochForm b = bloch_decompose(reference_state(ReferenceState::Sigma));
  CHECK(max_abs_diff(b.x, Vec3(0.4, 0.0, -0.4)) < 1e-15);
  CHECK(max_abs_diff(b.y, Vec3(0.4, 0.0, 0.0)) < 1e-15);
  CHECK(max_abs_diff(b.t, Mat3(Vec3(0.0, 0.0, 0.2).asDiagonal())) < 1e-15);
}

TEST_CASE("bloch_reconstruct examples") {
  CHECK(max_abs_diff(bloch_reconstruct(BlochForm{}), Mat4c(Mat4c::Identity() / 4.0)) < 1e-16);

  BlochForm bell;
  bell.t = Vec3(1.0, -1.0, 1.0).asDiagonal();
  CHECK(max_abs_diff(bloch_reconstruct(bell), test::bell_phi_plus()) < 1e-15);

  BlochForm over;
  over.x = Vec3(0.0, 0.0, 2.0);
  const Mat4c m = bloch_reconstruct(over);
  CHECK(max_abs_diff(m, m.adjoint()) < 1e-16);
  CHECK(std::abs(m.trace() - 1.0) < 1e-15);
  try {
    validate_density(m);
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPositive);
  }
}

TEST_CASE("decompose/reconstruct round trip and Bloch bounds") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const DensityMatrix rho = random_density(rng, 1 + i % 4);
    const BlochForm b = bloch_decompose(rho);
    REQUIRE(max_abs_diff(bloch_reconstruct(b), rho.matrix()) < 1e-12);
    REQUIRE(b.x.norm() <= 1.0 + 1e-12);
    REQUIRE(b.y.norm() <= 1.0 + 1e-12);
    REQUIRE(b.t.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
  }
}

TEST_CASE("single-qubit Bloch helpers invert each other") {
  const Vec3 r(0.3, -0.2, 0.5);
  CHECK(max_abs_diff(qubit_bloch_vector(qubit_from_bloch(r)), r) < 1e-15);
}
