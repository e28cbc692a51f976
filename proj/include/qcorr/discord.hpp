#pragma once

#include <array>

#include "qcorr/bloch.hpp"
#include "qcorr/sphere_search.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Bloch direction n of the projector pair (1 + n.sigma)/2, (1 - n.sigma)/2.
class MeasurementDirection {
 public:
  MeasurementDirection() = default;
  /// Normalizes n; throws ParamOutOfRange for a (near) zero vector.
  explicit MeasurementDirection(const Vec3& n);
  static MeasurementDirection from_angles(double theta, double phi);

  const Vec3& n() const noexcept { return n_; }
  /// Projector for outcome +1 (sign > 0) or -1.
  Mat2c projector(int sign) const;

 private:
  Vec3 n_ = Vec3::UnitZ();
};

/// Outcome of a projective measurement on one side.
struct ConditionalOutcome {
  double probability = 0.0;
  Mat2c state = Mat2c::Identity() / 2.0;  ///< post-measurement state of the other side
  bool degenerate = false;                ///< p < 1e-14: state is the I/2 placeholder
};

inline constexpr double kDegenerateProbability = 1e-14;

/// Measures `side` along dir; returns the +1 and -1 outcomes.
std::array<ConditionalOutcome, 2> conditional_state(const DensityMatrix& rho,
                                                    const MeasurementDirection& dir, Side side);

/// S(rho_A) + S(rho_B) - S(rho), bits.
double mutual_information(const DensityMatrix& rho);

struct ClassicalCorrelations {
  double j = 0.0;
  MeasurementDirection argmax;
  double final_spread = 0.0;  ///< see SphereSearchResult
};

/// J: max over projective measurements on `side` of S(other) - sum_j p_j S(other | j).
ClassicalCorrelations classical_correlations(const DensityMatrix& rho, Side side,
                                             const OptimizerSettings& settings = {});

struct DiscordResult {
  double discord = 0.0;
  double classical_corr = 0.0;
  double mutual_info = 0.0;
  MeasurementDirection argmax_direction;
  Side measured_side = Side::B;
};

/// Largest variation of J allowed across the final refinement stencil.
inline constexpr double kDiscordConvergence = 1e-10;
/// Negative round-off down to this value is clamped to zero.
inline constexpr double kNegativeClamp = 1e-9;

/// Entropic discord I - J with rank-1 orthogonal projectors on `side`.
/// Throws OptimizerBudgetExceeded when the refinement did not settle: no
/// refinement iterations at all, or J still varying by >= 1e-10 across the
/// final stencil.
DiscordResult discord(const DensityMatrix& rho, Side side = Side::B,
                      const OptimizerSettings& settings = {});

/// Closed-form squared Hilbert-Schmidt distance to the zero-discord set:
///   1/4 (|v|^2 + |T|_F^2 - lambda_max(v v^T + K))
/// with v = y, K = T^T T when B is measured, and v = x, K = T T^T for A.
double geometric_discord(const DensityMatrix& rho, Side side = Side::B);

struct GridSize {
  int polar = 180;
  int azimuthal = 360;
};

/// Brute-force discord over a dense direction grid, no refinement. Works on
/// the density matrix directly (projectors, partial traces, eigenvalue
/// entropies) and shares no code path with discord() beyond validation.
/// Requires at least a 180 x 360 grid.
double discord_oracle(const DensityMatrix& rho, Side side, GridSize grid = {});

}  // namespace qcorr
