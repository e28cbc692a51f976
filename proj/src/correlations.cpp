#include "qcorr/correlations.hpp"

#include <cmath>
#include <string>

#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

CorrelationMatrix correlation_matrix(const BlochForm& b) {
  CorrelationMatrix c;
  c.r(0, 0) = 1.0;
  c.r.block<1, 3>(0, 1) = b.y.transpose();
  c.r.block<3, 1>(1, 0) = b.x;
  c.r.block<3, 3>(1, 1) = b.t;
  c.singular_values = real_svd(c.r).singular_values;
  return c;
}

int numerical_rank(const RealMatrix& m, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw Error(Errc::ParamOutOfRange, "rank tolerance must lie in (0, 1)");
  }
  const Eigen::VectorXd sv = real_svd(m).singular_values;
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = rel_tol * sv(0);
  int rank = 0;
  for (double s : sv) {
    if (s > cutoff) ++rank;
  }
  return rank;
}

int correlation_rank(const DensityMatrix& rho, double rel_tol) {
  return numerical_rank(correlation_matrix(bloch_decompose(rho)).r, rel_tol);
}

int tensor_rank(const DensityMatrix& rho, double rel_tol) {
  return numerical_rank(bloch_decompose(rho).t, rel_tol);
}

std::vector<OperatorSchmidtTerm> operator_schmidt(const DensityMatrix& rho, double rel_tol) {
  const CorrelationMatrix c = correlation_matrix(bloch_decompose(rho));
  const int rank = numerical_rank(c.r, rel_tol);
  const SvdResult svd = real_svd(c.r);
  const auto& pauli = pauli_basis();
  const double norm = 1.0 / std::sqrt(2.0);

  std::vector<OperatorSchmidtTerm> terms;
  terms.reserve(static_cast<std::size_t>(rank));
  for (int n = 0; n < rank; ++n) {
    OperatorSchmidtTerm term;
    term.weight = 0.5 * svd.singular_values(n);
    for (int k = 0; k < 4; ++k) {
      term.op_a += svd.u(k, n) * norm * pauli[static_cast<std::size_t>(k)];
      term.op_b += svd.v(k, n) * norm * pauli[static_cast<std::size_t>(k)];
    }
    terms.push_back(term);
  }
  return terms;
}

Mat4c rebuild(const std::vector<OperatorSchmidtTerm>& terms) {
  Mat4c m = Mat4c::Zero();
  for (const auto& t : terms) m += t.weight * kron(t.op_a, t.op_b);
  return m;
}

const char* to_string(Quantumness q) {
  switch (q) {
    case Quantumness::Classical: return "Classical";
    case Quantumness::LocallyCreatableDiscord: return "LocallyCreatableDiscord";
    case Quantumness::GenuinelyQuantum: return "GenuinelyQuantum";
  }
  return "Unknown";
}

QuantumnessVerdict classify(int l_r, double discord_value, double tol, int l_t) {
  if (l_r < 1 || l_r > kMinDim * kMinDim) {
    throw Error(Errc::ParamOutOfRange, "correlation rank must be in 1..4, got " + std::to_string(l_r));
  }
  if (discord_value < -tol) {
    throw Error(Errc::ParamOutOfRange, "discord below -tol: " + std::to_string(discord_value));
  }
  QuantumnessVerdict v{Quantumness::Classical, l_r, l_t, discord_value};
  if (discord_value <= tol) {
    v.kind = Quantumness::Classical;
  } else if (l_r > kMinDim) {
    v.kind = Quantumness::GenuinelyQuantum;
  } else {
    v.kind = Quantumness::LocallyCreatableDiscord;
  }
  return v;
}

}  // namespace qcorr
