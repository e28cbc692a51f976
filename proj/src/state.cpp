#include "qcorr/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

DensityMatrix validate_density(const ComplexMatrix& m, const ToleranceSet& tol) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw Error(Errc::ShapeMismatch, "density matrix must be 4x4, got " +
                                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw Error(Errc::ShapeMismatch, "non-finite matrix entry");

  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev >= tol.herm) {
    throw Error(Errc::NotHermitian, "max |m - m^dagger| = " + std::to_string(herm_dev), herm_dev);
  }
  const Mat4c h = 0.5 * (m + m.adjoint());

  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) >= tol.trace) {
    throw Error(Errc::NotUnitTrace, "trace = " + std::to_string(tr), tr);
  }

  const Spectrum spec = hermitian_eigensystem(h, tol.herm);
  const double lowest = spec.eigenvalues(spec.eigenvalues.size() - 1);
  if (lowest < -tol.psd) {
    throw Error(Errc::NotPositive, "most negative eigenvalue " + std::to_string(lowest), lowest);
  }
  return DensityMatrix(h);
}

Mat2c partial_trace(const Mat4c& m, Side keep) {
  Mat2c out = Mat2c::Zero();
  // index = 2*a + b
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Side::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

Mat2c partial_trace(const DensityMatrix& rho, Side keep) { return partial_trace(rho.matrix(), keep); }

double von_neumann_entropy(const ComplexMatrix& m, const ToleranceSet& tol) {
  const Spectrum spec = hermitian_eigensystem(m, tol.herm);
  const double lowest = spec.eigenvalues(spec.eigenvalues.size() - 1);
  if (lowest < -tol.psd) {
    throw Error(Errc::NotPositive, "most negative eigenvalue " + std::to_string(lowest), lowest);
  }
  double s = 0.0;
  for (double lambda : spec.eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::clamp(s, 0.0, std::log2(static_cast<double>(m.rows())));
}

double binary_entropy(double p) {
  double s = 0.0;
  if (p > 0.0 && p < 1.0) s = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return s;
}

double qubit_entropy_from_bloch_length(double r) {
  return binary_entropy(0.5 * (1.0 + std::clamp(r, 0.0, 1.0)));
}

Mat4c projector(const Eigen::Vector4cd& psi) {
  const Eigen::Vector4cd v = psi.normalized();
  return v * v.adjoint();
}

Mat4c sigma_matrix() {
  Mat4c s;
  // clang-format off
  s << 0.2, 0.1, 0.1, 0.0,
       0.1, 0.1, 0.0, 0.1,
       0.1, 0.0, 0.3, 0.1,
       0.0, 0.1, 0.1, 0.4;
  // clang-format on
  return s;
}

namespace {

constexpr std::array<std::pair<ReferenceState, const char*>, 5> kNames{{
    {ReferenceState::RhoCl, "rho_cl"},
    {ReferenceState::RhoTilde, "rho_tilde"},
    {ReferenceState::Sigma, "sigma"},
    {ReferenceState::BellPhiPlus, "bell_phi_plus"},
    {ReferenceState::ProductPlus, "product_plus"},
}};

}  // namespace

const char* to_string(ReferenceState which) {
  for (const auto& [state, name] : kNames) {
    if (state == which) return name;
  }
  return "unknown";
}

DensityMatrix reference_state(ReferenceState which) {
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd ket00(1, 0, 0, 0);
  const Eigen::Vector4cd ket11(0, 0, 0, 1);
  const Eigen::Vector4cd ketpp(0.5, 0.5, 0.5, 0.5);
  Mat4c m;
  switch (which) {
    case ReferenceState::RhoCl:
      m = 0.5 * (projector(ket00) + projector(ket11));
      break;
    case ReferenceState::RhoTilde:
      m = 0.5 * (projector(ket00) + projector(ketpp));
      break;
    case ReferenceState::Sigma:
      m = sigma_matrix();
      break;
    case ReferenceState::BellPhiPlus:
      m = projector(Eigen::Vector4cd(h, 0, 0, h));
      break;
    case ReferenceState::ProductPlus:
      m = projector(ketpp);
      break;
  }
  return validate_density(m);
}

DensityMatrix reference_state(std::string_view name) {
  for (const auto& [state, known] : kNames) {
    if (name == known) return reference_state(state);
  }
  throw Error(Errc::UnknownName, "no reference state named '" + std::string(name) + "'");
}

}  // namespace qcorr
