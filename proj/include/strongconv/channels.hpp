#pragma once

#include "strongconv/qcore.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace strongconv {

QuantumChannel identity_channel(int d);

/// rho -> r rho + (1 - r) I/d for -1/(d^2-1) <= r <= 1.
/// Kraus family: Weyl-Heisenberg mixture for r >= 0, Choi eigendecomposition for r < 0.
QuantumChannel depolarizing(int d, double r);

/// rho -> sum_j a_j sigma_j rho sigma_j with sigma_0 = I and the Pauli matrices.
QuantumChannel pauli_diagonal(const std::array<double, 4>& weights);

/// rho -> (tr(rho) I - rho^T) / (d - 1), transpose in the computational basis.
QuantumChannel werner_holevo(int d);

/// I, X, Y, Z.
std::array<Matrix, 4> pauli_matrices();

/// X^a Z^b with X|j> = |j+1 mod d>, Z|j> = omega^j |j>.
Matrix weyl_operator(int d, int a, int b);

/// All d^2 Weyl operators acting identically on input and output (projective representation).
GroupRep weyl_heisenberg_group(int d);

/// {(I, I)}.
GroupRep trivial_group(int d);

/// Haar-random pairs (U, U).
GroupRep haar_pairs(int d);

/// Haar-random pairs (U, conj(U)), the symmetry of the Werner-Holevo channel.
GroupRep conjugate_haar_pairs(int d);

struct CovarianceReport {
  double max_residual = 0.0;
  bool passed = false;
  int elements_tested = 0;
  int states_tested = 0;
};

/// Max over tested g and random rho of ||g_out Phi(rho) g_out^dagger - Phi(g_in rho g_in^dagger)||_max.
/// Finite groups are tested on every element against `samples` random states; sampled groups
/// draw `samples` (element, state) pairs. Passes at residual <= 1e-9.
CovarianceReport check_covariance(const QuantumChannel& channel, const GroupRep& group, int samples,
                                  std::uint64_t seed);

enum class RepSide { Input, Output };

struct IrreducibilityReport {
  double max_residual = 0.0;
  bool passed = false;
  int samples = 0;
  std::string method;
};

/// Schur criterion: the group average of g X g^dagger must equal (tr X / d) I for `samples` random
/// Hermitian X. Finite groups use the exact twirl. Sampled groups project X orthogonally onto the
/// commutant of a batch of sampled elements, which is the same map as the twirl over the
/// generated group. Passes at residual <= 1e-8.
IrreducibilityReport check_irreducibility(const GroupRep& group, RepSide side, int samples, std::uint64_t seed);

/// Evidence that a channel satisfies the covariance-with-irreducible-output property.
struct CovarianceCertificate {
  std::string group;
  double covariance_residual = 0.0;
  double irreducibility_residual = 0.0;
  bool covariant = false;
  bool irreducible = false;
  bool override_acknowledged = false;

  bool valid() const { return override_acknowledged || (covariant && irreducible); }

  /// Caller explicitly accepts responsibility for the covariance property.
  static CovarianceCertificate acknowledged_override();
};

CovarianceCertificate certify_covariance(const QuantumChannel& channel, const GroupRep& group, int samples,
                                         std::uint64_t seed);

/// Symmetry group of a named channel, chosen by its label. Throws NotCertified for "custom".
GroupRep symmetry_group_for(const QuantumChannel& channel);

/// certify_covariance against symmetry_group_for(channel).
CovarianceCertificate certify_named_channel(const QuantumChannel& channel, int samples = 20,
                                            std::uint64_t seed = 1);

/// Largest alpha for which minimum output entropy additivity is claimed for this channel family
/// (depolarizing and Pauli-diagonal: 3, Werner-Holevo: 2, identity: 64); 0 for custom channels.
double additivity_alpha_max(const QuantumChannel& channel);

}  // namespace strongconv
