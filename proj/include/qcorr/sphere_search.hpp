#pragma once

#include <functional>

#include "qcorr/types.hpp"

namespace qcorr {

/// Settings for the derivative-free maximizer over unit directions.
///
/// A polar x azimuthal grid is scanned first; the incumbent is then refined by
/// repeatedly probing a 3x3 stencil in (theta, phi) whose step starts at the
/// grid spacing and is multiplied by refine_shrink after every iteration.
struct OptimizerSettings {
  int polar = 32;
  int azimuthal = 64;
  int refine_iters = 40;
  double refine_shrink = 0.5;
};

/// Throws ParamOutOfRange unless grid counts >= 8, refine_iters >= 0 and
/// refine_shrink in (0, 1).
void check_settings(const OptimizerSettings& s);

/// (sin t cos p, sin t sin p, cos t)
Vec3 sphere_point(double theta, double phi);

struct SphereSearchResult {
  Vec3 direction = Vec3::UnitZ();
  double value = 0.0;
  double grid_value = 0.0;  ///< best value on the coarse grid alone
  /// Largest |f(probe) - f(incumbent)| over the final refinement stencil; a
  /// small value means the step has shrunk below the scale where f changes.
  double final_spread = 0.0;
  int evaluations = 0;
};

/// Deterministic maximization of f over the unit sphere. Grid ties go to the
/// lowest grid index (theta-major); refinement only moves on strict improvement.
SphereSearchResult maximize_on_sphere(const std::function<double(const Vec3&)>& f,
                                      const OptimizerSettings& settings);

/// Plain grid scan, no refinement. Polar angles include both poles.
SphereSearchResult grid_maximum(const std::function<double(const Vec3&)>& f, int polar,
                                int azimuthal);

}  // namespace qcorr
