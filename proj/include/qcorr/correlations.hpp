#pragma once

#include <vector>

#include "qcorr/bloch.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Default relative tolerance for numerical ranks.
inline constexpr double kDefaultRankTol = 1e-7;

/// Coefficients of rho in the product basis {1, s1, s2, s3} (x) {1, s1, s2, s3},
/// with the overall factor 1/4 dropped. Rows are indexed by the A operator:
///
///        | 1   y1  y2  y3  |
///   r =  | x1  T11 T12 T13 |
///        | x2  T21 T22 T23 |
///        | x3  T31 T32 T33 |
struct CorrelationMatrix {
  Mat4 r = Mat4::Zero();
  Vec4 singular_values = Vec4::Zero();  ///< descending
};

CorrelationMatrix correlation_matrix(const BlochForm& b);

/// Number of singular values above rel_tol * (largest singular value).
int numerical_rank(const RealMatrix& m, double rel_tol = kDefaultRankTol);

/// L_R: number of product operators needed to write rho.
int correlation_rank(const DensityMatrix& rho, double rel_tol = kDefaultRankTol);

/// L_T: rank of the 3x3 correlation tensor.
int tensor_rank(const DensityMatrix& rho, double rel_tol = kDefaultRankTol);

/// One term c_n S_n (x) F_n of the operator-Schmidt decomposition.
struct OperatorSchmidtTerm {
  double weight = 0.0;
  Mat2c op_a = Mat2c::Zero();
  Mat2c op_b = Mat2c::Zero();
};

/// rho = sum_n c_n S_n (x) F_n with Tr(S_n S_m) = Tr(F_n F_m) = delta_nm.
/// Returns exactly correlation_rank(rho, rel_tol) terms, weights descending.
/// In the normalized basis {1, s_i}/sqrt(2) the coefficient matrix is r/2, so
/// the weights are the singular values of r divided by two.
std::vector<OperatorSchmidtTerm> operator_schmidt(const DensityMatrix& rho,
                                                  double rel_tol = kDefaultRankTol);

/// Sum of the terms, for reconstruction checks.
Mat4c rebuild(const std::vector<OperatorSchmidtTerm>& terms);

enum class Quantumness {
  Classical,                ///< discord within tolerance of zero
  LocallyCreatableDiscord,  ///< discordant, but L_R <= d_min: witness inconclusive
  GenuinelyQuantum,         ///< L_R > d_min certifies discord that local noise cannot create
};

const char* to_string(Quantumness q);

struct QuantumnessVerdict {
  Quantumness kind = Quantumness::Classical;
  int l_r = 0;
  int l_t = 0;
  double discord_value = 0.0;
};

/// Classical if discord <= tol, GenuinelyQuantum if l_r > 2, otherwise
/// LocallyCreatableDiscord. l_t is carried through for reporting.
QuantumnessVerdict classify(int l_r, double discord_value, double tol, int l_t = 0);

}  // namespace qcorr
