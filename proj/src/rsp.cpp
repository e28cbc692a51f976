#include "qcorr/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/bloch.hpp"
#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

RspResult rsp_fidelity(const DensityMatrix& rho) {
  const Mat3 t = bloch_decompose(rho).t;
  const Eigen::VectorXd ev = symmetric_eigensystem(t.transpose() * t).eigenvalues;  // descending
  RspResult r;
  r.t3_sq = std::max(ev(0), 0.0);
  r.t2_sq = std::max(ev(1), 0.0);
  r.t1_sq = std::max(ev(2), 0.0);
  r.fidelity = std::clamp(0.5 * (r.t1_sq + r.t2_sq), 0.0, 1.0);
  r.efficiency = rsp_efficiency(r.fidelity);
  return r;
}

double rsp_efficiency(double f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw Error(Errc::ParamOutOfRange, "fidelity must lie in [0, 1], got " + std::to_string(f));
  }
  const double d = 2.0 * f - 1.0;
  return d * d;
}

Vec3 EquatorialTarget::bloch() const { return {std::cos(phase), std::sin(phase), 0.0}; }

Correction Correction::pi_rotation_about(const Vec3& axis) {
  const double n = axis.norm();
  if (!(n > 1e-12)) throw Error(Errc::ParamOutOfRange, "rotation axis must be nonzero");
  return {Kind::PiRotation, axis / n};
}

Mat2c Correction::unitary() const {
  if (kind == Kind::Identity) return Mat2c::Identity();
  return cplx(0.0, -1.0) * pauli_dot(axis);
}

namespace {

double overlap(const Mat2c& state, const Vec3& target) {
  return std::clamp((state * qubit_from_bloch(target)).trace().real(), 0.0, 1.0);
}

}  // namespace

ProtocolOutcome rsp_protocol_eval(const DensityMatrix& rho, const EquatorialTarget& target,
                                  const MeasurementDirection& alice_dir,
                                  const Correction& correction) {
  const Vec3 s = target.bloch();
  const auto outcomes = conditional_state(rho, alice_dir, Side::A);
  if (outcomes[0].degenerate || outcomes[1].degenerate) {
    return {overlap(partial_trace(rho, Side::B), s), true};
  }
  const Mat2c u = correction.unitary();
  const Mat2c corrected = u * outcomes[1].state * u.adjoint();
  const double o = outcomes[0].probability * overlap(outcomes[0].state, s) +
                   outcomes[1].probability * overlap(corrected, s);
  return {std::clamp(o, 0.0, 1.0), false};
}

double rsp_protocol_average(const DensityMatrix& rho, int n_targets,
                            const OptimizerSettings& optimizer) {
  if (n_targets < 8) throw Error(Errc::ParamOutOfRange, "need at least 8 targets");
  const Correction choices[] = {Correction::identity(), Correction::pi_rotation_about(Vec3::UnitZ())};

  double total = 0.0;
  for (int k = 0; k < n_targets; ++k) {
    const EquatorialTarget target{2.0 * std::numbers::pi * k / n_targets};
    double best = 0.0;
    for (const Correction& c : choices) {
      const SphereSearchResult r = maximize_on_sphere(
          [&](const Vec3& n) {
            return rsp_protocol_eval(rho, target, MeasurementDirection(n), c).overlap;
          },
          optimizer);
      best = std::max(best, r.value);
    }
    const double score = 2.0 * best - 1.0;
    total += score * score;
  }
  return total / n_targets;
}

}  // namespace qcorr
