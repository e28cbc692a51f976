#pragma once

#include <cstdint>
#include <random>

#include "qcorr/state.hpp"

namespace qcorr {

using Rng = std::mt19937_64;

/// Ginibre state G G^dagger / Tr(G G^dagger) with G a 4 x rank complex Gaussian
/// matrix. Deterministic per seed within one build.
DensityMatrix random_density(std::uint64_t seed, int rank);
DensityMatrix random_density(Rng& rng, int rank);

/// Haar-random 2x2 unitary.
Mat2c random_unitary(Rng& rng);

/// rho_A (x) rho_B with independent Ginibre qubit factors of random rank.
DensityMatrix random_product_state(Rng& rng);

/// sum_k p_k rho_k (x) |k><k| (classical on `classical_side`) with a random
/// orthonormal basis {|k>} and random qubit states rho_k. Zero discord when the
/// classical side is the measured one.
DensityMatrix random_classical_quantum(Rng& rng, Side classical_side);

/// sum_k p_k |a_k><a_k| (x) |b_k><b_k| with both bases random: classical on both sides.
DensityMatrix random_classical_classical(Rng& rng);

/// Random qubit density matrix (Ginibre, rank 1 or 2).
Mat2c random_qubit_state(Rng& rng, int rank);

}  // namespace qcorr
