#include "qcorr/discord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

MeasurementDirection::MeasurementDirection(const Vec3& n) {
  const double norm = n.norm();
  if (!(norm > 1e-12) || !n.allFinite()) {
    throw Error(Errc::ParamOutOfRange, "measurement direction must be a nonzero vector");
  }
  n_ = n / norm;
}

MeasurementDirection MeasurementDirection::from_angles(double theta, double phi) {
  return MeasurementDirection(sphere_point(theta, phi));
}

Mat2c MeasurementDirection::projector(int sign) const {
  return 0.5 * (Mat2c::Identity() + (sign > 0 ? 1.0 : -1.0) * pauli_dot(n_));
}

std::array<ConditionalOutcome, 2> conditional_state(const DensityMatrix& rho,
                                                    const MeasurementDirection& dir, Side side) {
  std::array<ConditionalOutcome, 2> out;
  for (int k = 0; k < 2; ++k) {
    const Mat2c e = dir.projector(k == 0 ? +1 : -1);
    const Mat4c lift = side == Side::B ? kron(Mat2c::Identity(), e) : kron(e, Mat2c::Identity());
    const Mat4c post = lift * rho.matrix() * lift;
    const double p = post.trace().real();
    ConditionalOutcome& o = out[static_cast<std::size_t>(k)];
    o.probability = p;
    if (p < kDegenerateProbability) {
      o.degenerate = true;
      o.state = Mat2c::Identity() / 2.0;
    } else {
      o.state = partial_trace(post, other(side)) / p;
    }
  }
  return out;
}

double mutual_information(const DensityMatrix& rho) {
  const double sa = von_neumann_entropy(partial_trace(rho, Side::A));
  const double sb = von_neumann_entropy(partial_trace(rho, Side::B));
  const double s = von_neumann_entropy(rho.matrix());
  return sa + sb - s;
}

namespace {

// Measuring `side` along n leaves the other qubit, for outcome +-1, with
// probability (1 +- n.m)/2 and Bloch vector (u +- C n)/(1 +- n.m), where m is
// the measured side's Bloch vector, u the other side's, and C = T (side B) or
// T^T (side A). Returns S(other) minus the average conditional entropy.
struct ClassicalObjective {
  Vec3 measured;
  Vec3 unmeasured;
  Mat3 coupling;
  double unmeasured_entropy;

  ClassicalObjective(const BlochForm& b, Side side)
      : measured(side == Side::B ? b.y : b.x),
        unmeasured(side == Side::B ? b.x : b.y),
        coupling(side == Side::B ? b.t : Mat3(b.t.transpose())),
        unmeasured_entropy(qubit_entropy_from_bloch_length(unmeasured.norm())) {}

  double operator()(const Vec3& n) const {
    const double nm = n.dot(measured);
    const Vec3 cn = coupling * n;
    double conditional = 0.0;
    for (double sign : {1.0, -1.0}) {
      const double weight = 1.0 + sign * nm;  // 2 p
      if (0.5 * weight < kDegenerateProbability) continue;
      const Vec3 r = (unmeasured + sign * cn) / weight;
      conditional += 0.5 * weight * qubit_entropy_from_bloch_length(r.norm());
    }
    return unmeasured_entropy - conditional;
  }
};

double clamp_nonnegative(double v, const char* what) {
  if (v < -kNegativeClamp) {
    throw Error(Errc::InternalConsistency, std::string(what) + " is negative: " + std::to_string(v), v);
  }
  return std::max(v, 0.0);
}

}  // namespace

ClassicalCorrelations classical_correlations(const DensityMatrix& rho, Side side,
                                             const OptimizerSettings& settings) {
  const ClassicalObjective objective(bloch_decompose(rho), side);
  const SphereSearchResult best =
      maximize_on_sphere([&](const Vec3& n) { return objective(n); }, settings);
  ClassicalCorrelations out;
  out.j = clamp_nonnegative(best.value, "classical correlation");
  out.argmax = MeasurementDirection(best.direction);
  out.final_spread = best.final_spread;
  return out;
}

DiscordResult discord(const DensityMatrix& rho, Side side, const OptimizerSettings& settings) {
  const ClassicalCorrelations cc = classical_correlations(rho, side, settings);
  if (settings.refine_iters == 0 || cc.final_spread >= kDiscordConvergence) {
    throw Error(Errc::OptimizerBudgetExceeded,
                "J still varies by " + std::to_string(cc.final_spread) + " after " +
                    std::to_string(settings.refine_iters) + " refinement iterations",
                cc.final_spread);
  }
  DiscordResult r;
  r.mutual_info = mutual_information(rho);
  r.classical_corr = cc.j;
  r.discord = clamp_nonnegative(r.mutual_info - cc.j, "discord");
  r.argmax_direction = cc.argmax;
  r.measured_side = side;
  return r;
}

double geometric_discord(const DensityMatrix& rho, Side side) {
  const BlochForm b = bloch_decompose(rho);
  const Vec3 v = side == Side::B ? b.y : b.x;
  const Mat3 k = side == Side::B ? Mat3(b.t.transpose() * b.t) : Mat3(b.t * b.t.transpose());
  const Mat3 m = v * v.transpose() + k;
  const double lambda_max = symmetric_eigensystem(m).eigenvalues(0);
  const double d = 0.25 * (v.squaredNorm() + b.t.squaredNorm() - lambda_max);
  if (d < -1e-12) {
    throw Error(Errc::InternalConsistency, "geometric discord is negative: " + std::to_string(d), d);
  }
  return std::max(d, 0.0);
}

double discord_oracle(const DensityMatrix& rho, Side side, GridSize grid) {
  if (grid.polar < 180 || grid.azimuthal < 360) {
    throw Error(Errc::ParamOutOfRange, "oracle grid must be at least 180 x 360");
  }
  const Mat2c unmeasured = partial_trace(rho, other(side));
  const double s_unmeasured = von_neumann_entropy(unmeasured);
  auto objective = [&](const Vec3& n) {
    const auto outcomes = conditional_state(rho, MeasurementDirection(n), side);
    double conditional = 0.0;
    for (const auto& o : outcomes) {
      if (!o.degenerate) conditional += o.probability * von_neumann_entropy(o.state);
    }
    return s_unmeasured - conditional;
  };
  const SphereSearchResult best = grid_maximum(objective, grid.polar, grid.azimuthal);
  return mutual_information(rho) - best.value;
}

}  // namespace qcorr
