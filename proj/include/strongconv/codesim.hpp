#pragma once

#include "strongconv/qcore.hpp"
#include "strongconv/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strongconv {

enum class Generation { ProductRandom, EntangledRandom, Orthogonal };

std::string to_string(Generation g);
/// "product-random", "entangled-random" or "orthogonal"; ParseError otherwise.
Generation generation_from_string(const std::string& s);

/// ceil(2^{nR}) with a 1e-9 guard against round-off above an exact power of two.
std::size_t message_count(int n, double rate);

/// Pure codewords on the n-fold input space, stored as unit vectors.
struct Codebook {
  int n = 0;
  double rate = 0.0;
  int dim_in = 0;
  Generation generation = Generation::EntangledRandom;
  std::uint64_t seed = 0;
  std::vector<Vector> codewords;

  std::size_t size() const { return codewords.size(); }
  /// log2(size) / n
  double effective_rate() const;
  DensityMatrix state(std::size_t x) const { return DensityMatrix::pure(codewords[x]); }
};

/// Throws ResourceExceeded when dim_in^n exceeds budget.max_dim or count * dim^2 exceeds
/// budget.max_kraus_entries.
Codebook make_codebook(int dim_in, int n, double rate, Generation generation, std::uint64_t seed,
                       const ResourceBudget& budget = {});

/// E_x = S^{-1/2} sigma_x S^{-1/2} with S = sum_x sigma_x inverted on its support; the projector
/// onto the kernel of S is added to E_0.
Povm pgm_decoder(const std::vector<DensityMatrix>& outputs);

/// (1/|code|) sum_x tr(E_x Phi^{(x) n}(rho_x)), computed exactly.
double exact_success_probability(const QuantumChannel& channel, const Codebook& code, const Povm& decoder,
                                 const ResourceBudget& budget = {});

/// Exact success probability of the PGM for the channel outputs of `code`, without
/// materializing the POVM.
double pgm_success_probability(const QuantumChannel& channel, const Codebook& code,
                               const ResourceBudget& budget = {});

struct SimResult {
  int n = 0;
  double rate_nominal = 0.0;
  double rate_effective = 0.0;
  int codebooks = 0;
  std::size_t messages = 0;
  std::string generation;
  std::uint64_t seed = 0;
  /// Mean over codebooks.
  double p_succ_hat = 0.0;
  double p_succ_max = 0.0;
  double p_succ_min = 0.0;
  /// Standard error of the mean.
  double stderr_ = 0.0;
  double exponent = 0.0;
  double envelope = 1.0;
  /// Every codebook lies under the envelope (+1e-9).
  bool pass = false;
  std::vector<double> per_codebook;
};

/// Draws `codebooks` codebooks (stream derive_seed(seed, i) each), decodes each with the PGM
/// on the channel outputs and compares with 2^{-n * exponent}.
SimResult run_experiment(const QuantumChannel& channel, int n, double rate, int codebooks, Generation generation,
                         std::uint64_t seed, double exponent, const ResourceBudget& budget = {});

/// Least-squares slope of -log2 p_succ_hat against n. Throws DomainError with fewer than 3
/// distinct n values.
double slope_estimate(const std::vector<SimResult>& results);

/// n,R_nominal,R_effective,p_succ_max,p_succ_mean,stderr,envelope,pass
std::string sim_csv_header();
std::string to_csv_row(const SimResult& r);
Json to_json(const SimResult& r);

}  // namespace strongconv
