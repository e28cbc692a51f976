#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/error.hpp"
#include "qcorr/rsp.hpp"
#include "test_support.hpp"

using namespace qcorr;
using qcorr::test::max_abs_diff;

TEST_CASE("validate_cptp examples") {
  CptpCheck c = validate_cptp(identity_channel());
  CHECK(c.cptp);
  CHECK(c.defect == doctest::Approx(0.0));

  c = validate_cptp(zero_plus());
  CHECK(c.cptp);
  CHECK(c.defect < 1e-15);

  c = validate_cptp(KrausChannel{{0.5 * Mat2c::Identity()}});
  CHECK_FALSE(c.cptp);
  CHECK(c.defect == doctest::Approx(0.75));

  CHECK_THROWS_AS(validate_cptp(KrausChannel{}), Error);
}

TEST_CASE("Phi x Phi maps rho_cl onto rho_tilde") {
  const DensityMatrix out = apply_local(reference_state(ReferenceState::RhoCl), {zero_plus(), zero_plus()});
  CHECK(max_abs_diff(out.matrix(), reference_state(ReferenceState::RhoTilde).matrix()) < 1e-12);
}

TEST_CASE("identity channel leaves states alone") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_density(rng, 1 + i % 4);
    const DensityMatrix out = apply_local(rho, {identity_channel(), identity_channel()});
    REQUIRE(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
  }
}

TEST_CASE("full depolarization sends the Bell state to I/4") {
  const DensityMatrix out =
      apply_local(reference_state(ReferenceState::BellPhiPlus), {depolarizing(1.0), depolarizing(1.0)});
  CHECK(max_abs_diff(out.matrix(), Mat4c(Mat4c::Identity() / 4.0)) < 1e-15);
}

TEST_CASE("builtin channels") {
  for (double p : {0.0, 0.3, 1.0}) {
    CHECK(validate_cptp(dephasing(p)).cptp);
    CHECK(validate_cptp(depolarizing(p)).cptp);
    CHECK(validate_cptp(amplitude_damping(p)).cptp);
  }
  const KrausChannel d0 = dephasing(0.0);
  CHECK(max_abs_diff(d0.ops[0], Mat2c(Mat2c::Identity())) == 0.0);
  CHECK(d0.ops[1].isZero(0.0));

  // depolarizing(p) fixes I/2 on one side.
  const DensityMatrix mixed = validate_density(Mat4c(Mat4c::Identity() / 4.0));
  CHECK(max_abs_diff(apply_local(mixed, {depolarizing(0.4), identity_channel()}).matrix(), mixed.matrix()) <
        1e-15);

  CHECK(builtin_channel("zero_plus").ops.size() == 2);
  CHECK(builtin_channel("depolarizing", 0.2).ops.size() == 4);
  CHECK_THROWS_AS(builtin_channel("teleport"), Error);
  try {
    dephasing(1.5);
    FAIL("expected ParamOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParamOutOfRange);
  }
}

TEST_CASE("filters can annihilate a state") {
  Mat4c m = Mat4c::Zero();
  m(3, 3) = 1.0;  // |11>
  Mat2c p0 = Mat2c::Zero();
  p0(0, 0) = 1.0;
  try {
    apply_local(validate_density(m), {KrausChannel{{p0}}, identity_channel()});
    FAIL("expected Annihilated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Annihilated);
  }
}

TEST_CASE("filtering maps are renormalized") {
  Mat2c f = Mat2c::Identity();
  f(1, 1) = 0.5;
  const DensityMatrix out = apply_local(reference_state(ReferenceState::RhoCl), {KrausChannel{{f}}, identity_channel()});
  CHECK(std::abs(out.matrix().trace() - 1.0) < 1e-15);
  CHECK(out(0, 0).real() == doctest::Approx(0.8));
}

TEST_CASE("random CPTP channels preserve trace and positivity") {
  Rng rng(13);
  std::uniform_int_distribution<int> kraus(1, 4);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density(rng, 1 + i % 4);
    const LocalProductMap map{random_channel(rng, kraus(rng)), random_channel(rng, kraus(rng))};
    REQUIRE(validate_cptp(map.a).cptp);
    REQUIRE(validate_cptp(map.b).cptp);
    const Mat4c raw = apply_local_unnormalized(rho, map);
    REQUIRE(std::abs(raw.trace() - 1.0) < 1e-10);
    REQUIRE_NOTHROW(validate_density(raw));
  }
}

TEST_CASE("rho_cl -> rho_tilde chain changes every indicator as expected") {
  const DensityMatrix before = reference_state(ReferenceState::RhoCl);
  const DensityMatrix after = apply_local(before, {zero_plus(), zero_plus()});
  CHECK(correlation_rank(before) == 2);
  CHECK(correlation_rank(after) == 2);
  CHECK(tensor_rank(before) == 1);
  CHECK(tensor_rank(after) == 2);
  CHECK(discord(before).discord < 1e-12);
  CHECK(discord(after).discord > 1e-3);
  CHECK(rsp_fidelity(before).fidelity == doctest::Approx(0.0));
  CHECK(rsp_fidelity(after).fidelity == doctest::Approx(0.125));
}
