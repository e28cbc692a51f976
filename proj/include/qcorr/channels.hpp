#pragma once

#include <string_view>
#include <vector>

#include "qcorr/random.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Single-qubit map X -> sum_i K_i X K_i^dagger.
struct KrausChannel {
  std::vector<Mat2c> ops;
};

struct CptpCheck {
  bool cptp = false;
  double defect = 0.0;  ///< operator norm of sum K^dagger K - 1
};

inline constexpr double kCptpThreshold = 1e-9;

/// Throws EmptyChannel for an empty operator list.
CptpCheck validate_cptp(const KrausChannel& c);

/// Independent channels on A and B.
struct LocalProductMap {
  KrausChannel a;
  KrausChannel b;
};

/// sum_ij (K_i (x) L_j) rho (K_i (x) L_j)^dagger before renormalization.
Mat4c apply_local_unnormalized(const DensityMatrix& rho, const LocalProductMap& m);

/// apply_local_unnormalized() divided by its trace and validated. Filtering
/// (non trace-preserving) maps are accepted; throws Annihilated when the
/// trace drops to 1e-12 or below.
DensityMatrix apply_local(const DensityMatrix& rho, const LocalProductMap& m);

inline constexpr double kAnnihilationTrace = 1e-12;

KrausChannel identity_channel();
/// X -> |0><0| X |0><0| + |+><1| X |1><+|
KrausChannel zero_plus();
/// Phase flip with probability p: {sqrt(1-p) 1, sqrt(p) Z}.
KrausChannel dephasing(double p);
/// rho -> (1-p) rho + p 1/2.
KrausChannel depolarizing(double p);
KrausChannel amplitude_damping(double gamma);

/// Lookup by name: identity, zero_plus, dephasing, depolarizing, amplitude_damping.
/// Throws UnknownName or ParamOutOfRange.
KrausChannel builtin_channel(std::string_view name, double param = 0.0);

/// Random CPTP channel with n_kraus operators, from a Haar-like isometry
/// (QR of a complex Gaussian 2n x 2 matrix).
KrausChannel random_channel(Rng& rng, int n_kraus);

}  // namespace qcorr
