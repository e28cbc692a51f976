#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

constexpr double kPhaseCutoff = 1e-12;

void check_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols || rows == 0 || rows > kMaxSolverDim) {
    throw Error(Errc::ShapeMismatch, std::string(what) + " needs a square matrix of size 1.." +
                                         std::to_string(kMaxSolverDim) + ", got " +
                                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// Permutation that sorts eigenvalues descending; equal values keep solver order.
std::vector<Eigen::Index> descending_order(const Eigen::VectorXd& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values(a) > values(b); });
  return order;
}

}  // namespace

Spectrum hermitian_eigensystem(const ComplexMatrix& m, double herm_tol) {
  check_square(m.rows(), m.cols(), "hermitian_eigensystem");
  if (!m.allFinite()) throw Error(Errc::ShapeMismatch, "non-finite matrix entry");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > herm_tol) {
    throw Error(Errc::NotHermitian, "deviation " + std::to_string(dev), dev);
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NoConvergence, "Hermitian eigensolver did not converge");
  }

  const auto order = descending_order(solver.eigenvalues());
  Spectrum out;
  out.eigenvalues.resize(h.rows());
  out.eigenvectors.resize(h.rows(), h.cols());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = solver.eigenvalues()(src);
    Eigen::VectorXcd v = solver.eigenvectors().col(src).normalized();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > kPhaseCutoff) {
        v *= std::conj(v(i)) / std::abs(v(i));
        v(i) = std::abs(v(i));
        break;
      }
    }
    out.eigenvectors.col(k) = v;
  }
  return out;
}

RealSpectrum symmetric_eigensystem(const RealMatrix& m, double sym_tol) {
  check_square(m.rows(), m.cols(), "symmetric_eigensystem");
  if (!m.allFinite()) throw Error(Errc::ShapeMismatch, "non-finite matrix entry");
  const double dev = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (dev > sym_tol) throw Error(Errc::NotHermitian, "deviation " + std::to_string(dev), dev);
  const RealMatrix s = 0.5 * (m + m.transpose());

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(s);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NoConvergence, "symmetric eigensolver did not converge");
  }

  const auto order = descending_order(solver.eigenvalues());
  RealSpectrum out;
  out.eigenvalues.resize(s.rows());
  out.eigenvectors.resize(s.rows(), s.cols());
  for (Eigen::Index k = 0; k < s.rows(); ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = solver.eigenvalues()(src);
    Eigen::VectorXd v = solver.eigenvectors().col(src).normalized();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) > kPhaseCutoff) {
        if (v(i) < 0) v = -v;
        break;
      }
    }
    out.eigenvectors.col(k) = v;
  }
  return out;
}

SvdResult real_svd(const RealMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.rows() > kMaxSolverDim || m.cols() > kMaxSolverDim) {
    throw Error(Errc::ShapeMismatch, "real_svd needs a matrix of at most 4x4");
  }
  if (!m.allFinite()) throw Error(Errc::ShapeMismatch, "non-finite matrix entry");

  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (!svd.singularValues().allFinite()) {
    throw Error(Errc::NoConvergence, "SVD produced non-finite singular values");
  }
  // JacobiSVD already returns singular values sorted in decreasing order.
  return {svd.singularValues(), svd.matrixU(), svd.matrixV()};
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

}  // namespace qcorr
