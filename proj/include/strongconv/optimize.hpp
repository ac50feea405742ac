#pragma once

#include "strongconv/channels.hpp"
#include "strongconv/entropy.hpp"
#include "strongconv/pure_search.hpp"
#include "strongconv/qcore.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace strongconv {

struct OptimizerConfig {
  /// Multistart count for single-copy problems.
  int restarts = 32;
  /// Multistart count when the channel is a tensor power (additivity checks).
  int multi_copy_restarts = 128;
  int max_iters = 500;
  double initial_step = 0.5;
  double step_shrink = 0.5;
  int max_backtracks = 40;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-12;
  /// Restart values within this distance of the best count as agreeing.
  double agreement_tol = 1e-6;
  ResourceBudget budget;

  /// Throws DomainError unless restarts >= 1 and tolerance > 0.
  void validate() const;
  SearchSettings search() const;
};

struct MinOutputResult {
  double value = 0.0;
  DensityMatrix argmin_state = DensityMatrix::maximally_mixed(1);
  Vector argmin_vector;
  int restarts_agreeing = 0;
  std::vector<double> per_restart_values;
};

/// min over pure inputs of S_alpha(Phi(|psi><psi|)) by multistart local search on the unit
/// sphere. Restarts run in parallel with per-restart RNG streams; the smallest value wins and
/// ties go to the lowest restart index. `warm_starts` are tried before the random restarts.
MinOutputResult min_output_renyi(const QuantumChannel& channel, AlphaParam alpha, const OptimizerConfig& cfg,
                                 std::span<const Vector> warm_starts = {});

/// log2(d_out) - S_alpha^min(Phi). Throws NotCertified unless `cert.valid()`.
double chi_alpha_star_covariant(const QuantumChannel& channel, AlphaParam alpha, const OptimizerConfig& cfg,
                                const CovarianceCertificate& cert);

struct MaxDivergence {
  double value = 0.0;
  Vector argmax;
  bool infinite = false;
};

/// max over pure rho of D_alpha(Phi(rho) || sigma). Infinite when some output leaves supp(sigma).
MaxDivergence max_output_divergence(const QuantumChannel& channel, const DensityMatrix& sigma, AlphaParam alpha,
                                    const OptimizerConfig& cfg, std::span<const Vector> warm_starts = {});

struct MinimaxBounds {
  /// min over sigma_out of max_rho D_alpha(Phi(rho) || sigma_out), as found.
  double lower = 0.0;
  /// min over sigma_in of max_rho D_alpha(Phi(rho) || Phi(sigma_in)), as found.
  double upper = 0.0;
  DensityMatrix sigma_out = DensityMatrix::maximally_mixed(1);
  DensityMatrix sigma_in = DensityMatrix::maximally_mixed(1);
  int outer_iterations = 0;
};

/// Both sides of the minimax sandwich around chi_alpha^*. The outer minimization runs over
/// full-rank states exp(H)/tr exp(H) by descent on a log-sum-exp smoothing of the max over the
/// inner maximizers found so far; each outer step re-solves the inner maximization. The reported
/// values are honest inner maxima at the best outer iterates.
MinimaxBounds chi_alpha_star_minimax_bounds(const QuantumChannel& channel, AlphaParam alpha,
                                            const OptimizerConfig& cfg);

struct EnsembleSearchResult {
  Ensemble ensemble;
  std::vector<Vector> inputs;
  double value = 0.0;
};

/// Maximizes chi_alpha over ensembles of at most k channel outputs of pure inputs.
EnsembleSearchResult optimal_ensemble_search(const QuantumChannel& channel, AlphaParam alpha, int k,
                                             const OptimizerConfig& cfg);

struct MaximalDistanceReport {
  double max_divergence = 0.0;
  double chi_alpha = 0.0;
  double gap = 0.0;
  bool infinite = false;
  bool passed = false;
};

/// gap = max_rho D_alpha(Phi(rho) || mu(ens)) - chi_alpha(ens); passes when finite and <= 1e-3.
MaximalDistanceReport maximal_distance_check(const QuantumChannel& channel, const Ensemble& ens, AlphaParam alpha,
                                             const OptimizerConfig& cfg);

struct AdditivityReport {
  int copies = 0;
  double single_copy = 0.0;
  double multi_copy = 0.0;
  /// copies * S_min(Phi) - S_min(Phi^{(x) copies})
  double gap = 0.0;
  bool subadditive = false;
  bool additive = false;
  /// alpha lies in the range where additivity is claimed for this channel family.
  bool claim_in_range = false;
};

/// copies in {2, 3}. The product of single-copy witnesses seeds the multi-copy search, so
/// the subadditive direction is respected by construction. Passes additivity at |gap| <= 1e-4.
AdditivityReport additivity_check(const QuantumChannel& channel, AlphaParam alpha, int copies,
                                  const OptimizerConfig& cfg);

}  // namespace strongconv
