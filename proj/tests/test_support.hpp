#pragma once

#include <cmath>
#include <random>

#include <doctest.h>

#include "qcorr/types.hpp"

namespace qcorr::test {

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Random Hermitian matrix with Gaussian entries.
template <typename RngT>
ComplexMatrix random_hermitian(RngT& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return 0.5 * (m + m.adjoint());
}

template <typename RngT>
RealMatrix random_real(RngT& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

inline Mat4c bell_phi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd v(h, 0, 0, h);
  return v * v.adjoint();
}

}  // namespace qcorr::test
