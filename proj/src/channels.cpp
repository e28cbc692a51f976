#include "qcorr/channels.hpp"

#include <cmath>
#include <string>

#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

CptpCheck validate_cptp(const KrausChannel& c) {
  if (c.ops.empty()) throw Error(Errc::EmptyChannel, "Kraus channel has no operators");
  Mat2c sum = Mat2c::Zero();
  for (const Mat2c& k : c.ops) sum += k.adjoint() * k;
  const Mat2c diff = sum - Mat2c::Identity();
  // Hermitian, so the operator norm is the largest |eigenvalue|.
  const Eigen::VectorXd ev = hermitian_eigensystem(diff, 1e-6).eigenvalues;
  const double defect = ev.cwiseAbs().maxCoeff();
  return {defect < kCptpThreshold, defect};
}

Mat4c apply_local_unnormalized(const DensityMatrix& rho, const LocalProductMap& m) {
  if (m.a.ops.empty() || m.b.ops.empty()) {
    throw Error(Errc::EmptyChannel, "both sides of a local map need Kraus operators");
  }
  Mat4c out = Mat4c::Zero();
  for (const Mat2c& ka : m.a.ops) {
    for (const Mat2c& kb : m.b.ops) {
      const Mat4c k = kron(ka, kb);
      out += k * rho.matrix() * k.adjoint();
    }
  }
  return out;
}

DensityMatrix apply_local(const DensityMatrix& rho, const LocalProductMap& m) {
  const Mat4c raw = apply_local_unnormalized(rho, m);
  const double tr = raw.trace().real();
  if (tr <= kAnnihilationTrace) {
    throw Error(Errc::Annihilated, "output trace " + std::to_string(tr), tr);
  }
  return validate_density(raw / tr);
}

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::ParamOutOfRange, std::string(what) + " parameter must lie in [0, 1], got " +
                                           std::to_string(p));
  }
}

}  // namespace

KrausChannel identity_channel() { return {{Mat2c::Identity()}}; }

KrausChannel zero_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  Mat2c k0;
  k0 << 1, 0, 0, 0;  // |0><0|
  Mat2c k1;
  k1 << 0, h, 0, h;  // |+><1|
  return {{k0, k1}};
}

KrausChannel dephasing(double p) {
  check_probability(p, "dephasing");
  Mat2c z;
  z << 1, 0, 0, -1;
  return {{std::sqrt(1.0 - p) * Mat2c::Identity(), std::sqrt(p) * z}};
}

KrausChannel depolarizing(double p) {
  check_probability(p, "depolarizing");
  const cplx i(0.0, 1.0);
  Mat2c x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  const double w = std::sqrt(p / 4.0);
  return {{std::sqrt(1.0 - 3.0 * p / 4.0) * Mat2c::Identity(), w * x, w * y, w * z}};
}

KrausChannel amplitude_damping(double gamma) {
  check_probability(gamma, "amplitude_damping");
  Mat2c k0, k1;
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return {{k0, k1}};
}

KrausChannel builtin_channel(std::string_view name, double param) {
  if (name == "identity") return identity_channel();
  if (name == "zero_plus") return zero_plus();
  if (name == "dephasing") return dephasing(param);
  if (name == "depolarizing") return depolarizing(param);
  if (name == "amplitude_damping") return amplitude_damping(param);
  throw Error(Errc::UnknownName, "no builtin channel named '" + std::string(name) + "'");
}

KrausChannel random_channel(Rng& rng, int n_kraus) {
  if (n_kraus < 1 || n_kraus > 4) {
    throw Error(Errc::ParamOutOfRange, "random channel needs 1..4 Kraus operators");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(2 * n_kraus, 2);
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < 2; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cplx(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix iso = qr.householderQ() * ComplexMatrix::Identity(g.rows(), 2);
  KrausChannel ch;
  for (int k = 0; k < n_kraus; ++k) ch.ops.push_back(iso.block(2 * k, 0, 2, 2));
  return ch;
}

}  // namespace qcorr
