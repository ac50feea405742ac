#pragma once

#include "strongconv/qcore.hpp"

#include <cstdint>
#include <random>

namespace strongconv {

using Rng = std::mt19937_64;

/// Independent stream seed for work unit `index` under a master seed (splitmix64 mixing),
/// so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random unitary via QR of a complex Ginibre matrix with phase correction.
Matrix haar_unitary(int dim, Rng& rng);

/// Haar-random unit vector.
Vector haar_vector(int dim, Rng& rng);

/// Random mixed state: eigenvalues uniform on the simplex, Haar eigenbasis.
DensityMatrix random_state(int dim, Rng& rng);

/// Random state with rank at most `rank`.
DensityMatrix random_state_of_rank(int dim, int rank, Rng& rng);

/// Random PSD matrix (not normalized): G G^dagger for Ginibre G.
Matrix random_psd(int dim, Rng& rng);

/// Random Hermitian matrix with Gaussian entries.
Matrix random_hermitian(int dim, Rng& rng);

/// Uniform sample from the probability simplex with `n` entries.
std::vector<double> random_simplex(int n, Rng& rng);

/// Random ensemble of `size` states, with simplex probabilities.
Ensemble random_ensemble(int size, int dim, Rng& rng);

/// Channel with `kraus_count` Kraus operators cut from a Haar-random isometry.
QuantumChannel random_channel(int dim_in, int dim_out, int kraus_count, Rng& rng);

}  // namespace strongconv
