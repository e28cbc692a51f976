#include "qcorr/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcorr/error.hpp"

namespace qcorr {

void check_settings(const OptimizerSettings& s) {
  if (s.polar < 8 || s.azimuthal < 8) {
    throw Error(Errc::ParamOutOfRange, "optimizer grid counts must be >= 8");
  }
  if (s.refine_iters < 0) throw Error(Errc::ParamOutOfRange, "refine_iters must be >= 0");
  if (!(s.refine_shrink > 0.0 && s.refine_shrink < 1.0)) {
    throw Error(Errc::ParamOutOfRange, "refine_shrink must lie in (0, 1)");
  }
}

Vec3 sphere_point(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

namespace {

struct GridScan {
  double theta = 0.0;
  double phi = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

GridScan scan(const std::function<double(const Vec3&)>& f, int polar, int azimuthal) {
  if (polar < 2 || azimuthal < 1) throw Error(Errc::ParamOutOfRange, "grid too small");
  const double dtheta = std::numbers::pi / (polar - 1);
  const double dphi = 2.0 * std::numbers::pi / azimuthal;
  GridScan best;
  bool have = false;
  for (int i = 0; i < polar; ++i) {
    const double theta = i * dtheta;
    // The poles are single points; one azimuth is enough there.
    const int n_phi = (i == 0 || i == polar - 1) ? 1 : azimuthal;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = j * dphi;
      const double v = f(sphere_point(theta, phi));
      ++best.evaluations;
      if (!have || v > best.value) {
        best.theta = theta;
        best.phi = phi;
        best.value = v;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

SphereSearchResult grid_maximum(const std::function<double(const Vec3&)>& f, int polar,
                                int azimuthal) {
  const GridScan g = scan(f, polar, azimuthal);
  SphereSearchResult r;
  r.direction = sphere_point(g.theta, g.phi);
  r.value = g.value;
  r.grid_value = g.value;
  r.evaluations = g.evaluations;
  return r;
}

SphereSearchResult maximize_on_sphere(const std::function<double(const Vec3&)>& f,
                                      const OptimizerSettings& settings) {
  check_settings(settings);
  const GridScan g = scan(f, settings.polar, settings.azimuthal);

  double theta = g.theta;
  double phi = g.phi;
  double best = g.value;
  int evaluations = g.evaluations;
  double step_theta = std::numbers::pi / (settings.polar - 1);
  double step_phi = 2.0 * std::numbers::pi / settings.azimuthal;
  double spread = 0.0;

  for (int iter = 0; iter < settings.refine_iters; ++iter) {
    const double before = best;
    spread = 0.0;
    double cand_theta = theta;
    double cand_phi = phi;
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        if (a == 0 && b == 0) continue;
        const double t = theta + a * step_theta;
        const double p = phi + b * step_phi;
        const double v = f(sphere_point(t, p));
        ++evaluations;
        spread = std::max(spread, std::abs(v - before));
        if (v > best) {
          best = v;
          cand_theta = t;
          cand_phi = p;
        }
      }
    }
    theta = cand_theta;
    phi = cand_phi;
    step_theta *= settings.refine_shrink;
    step_phi *= settings.refine_shrink;
  }

  SphereSearchResult r;
  r.direction = sphere_point(theta, phi);
  r.value = best;
  r.grid_value = g.value;
  r.final_spread = spread;
  r.evaluations = evaluations;
  return r;
}

}  // namespace qcorr
