#pragma once

#include <optional>

#include "qcorr/discord.hpp"
#include "qcorr/sphere_search.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Remote-state-preparation figures from the correlation tensor.
struct RspResult {
  double fidelity = 0.0;    ///< (t1_sq + t2_sq) / 2
  double efficiency = 0.0;  ///< (2 F - 1)^2
  double t1_sq = 0.0;       ///< smallest eigenvalue of T^T T
  double t2_sq = 0.0;       ///< middle eigenvalue
  double t3_sq = 0.0;       ///< largest eigenvalue
  std::optional<double> protocol_fidelity;
};

/// F = (T1^2 + T2^2)/2 where T1^2 <= T2^2 are the two lowest eigenvalues of T^T T.
RspResult rsp_fidelity(const DensityMatrix& rho);

/// (2 f - 1)^2 for f in [0, 1]. Note that it is 1 both at f = 1 and at f = 0.
double rsp_efficiency(double f);

/// Pure target on the equator of Bob's Bloch sphere.
struct EquatorialTarget {
  double phase = 0.0;
  Vec3 bloch() const;
};

/// What Bob does to the branch where Alice reports outcome -1.
struct Correction {
  enum class Kind { Identity, PiRotation };
  Kind kind = Kind::Identity;
  Vec3 axis = Vec3::UnitZ();

  static Correction identity() { return {}; }
  static Correction pi_rotation_about(const Vec3& axis);
  /// Unitary applied to Bob's qubit (-i a.sigma for a pi rotation).
  Mat2c unitary() const;
};

struct ProtocolOutcome {
  double overlap = 0.5;     ///< outcome-averaged <s| rho_B |s>, in [0, 1]
  bool degenerate = false;  ///< an outcome had p < 1e-14; overlap is the unconditional one
};

/// Exact evaluation of one round of the one-bit protocol:
/// Alice projects A along +-alice_dir and sends the bit; Bob leaves the +1
/// branch alone and applies `correction` to the -1 branch. This protocol is a
/// reconstruction used to cross-check rsp_fidelity(); it is not normative.
ProtocolOutcome rsp_protocol_eval(const DensityMatrix& rho, const EquatorialTarget& target,
                                  const MeasurementDirection& alice_dir,
                                  const Correction& correction);

/// Average over n_targets equally spaced equatorial phases of (2 o* - 1)^2,
/// where o* is the overlap maximized over Alice's direction and over Bob's
/// choice {identity, pi rotation about z}. Comparable to rsp_fidelity().
double rsp_protocol_average(const DensityMatrix& rho, int n_targets,
                            const OptimizerSettings& optimizer = {});

}  // namespace qcorr
