#pragma once

#include "strongconv/optimize.hpp"
#include "strongconv/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strongconv {

/// log2(d_out) - S^min(Phi) with the von Neumann minimum output entropy.
/// Throws NotCertified unless `cert.valid()`.
double capacity_covariant(const QuantumChannel& channel, const OptimizerConfig& cfg, const CovarianceCertificate& cert);
/// Certifies a named channel first (certify_named_channel).
double capacity_covariant(const QuantumChannel& channel, const OptimizerConfig& cfg);

/// Geometric grid of `points` orders from 1 + 1e-4 to alpha_max inclusive.
std::vector<double> default_alpha_grid(double alpha_max, int points = 64);

/// Throws DomainError unless every alpha lies in (1, additivity_alpha_max(channel)].
void validate_alpha_grid(const QuantumChannel& channel, const std::vector<double>& alphas);

/// chi_alpha^*(Phi) on a grid, evaluated in grid order with each point warm-started from the
/// previous minimizer.
struct ChiProfile {
  std::vector<double> alphas;
  std::vector<double> chi;
};

ChiProfile chi_alpha_star_profile(const QuantumChannel& channel, const std::vector<double>& alphas,
                                  const OptimizerConfig& cfg, const CovarianceCertificate& cert);

struct ExponentResult {
  /// max over the grid of (1 - 1/alpha)(R - chi_alpha^*), clamped at 0.
  double exponent = 0.0;
  double alpha_star = 0.0;
  /// The same maximum before clamping.
  double raw = 0.0;
};

ExponentResult exponent_from_profile(const ChiProfile& profile, double rate);

ExponentResult strong_converse_exponent(const QuantumChannel& channel, double rate, const std::vector<double>& alphas,
                                        const OptimizerConfig& cfg, const CovarianceCertificate& cert);

/// 2^{-n * exponent}. The rate enters only through the exponent.
double success_probability_envelope(int n, double exponent);

struct ExponentCurve {
  std::vector<double> rate_grid;
  std::vector<double> exponent;
  std::vector<double> alpha_argmax;
  std::vector<double> raw;
  double capacity = 0.0;
  /// Block lengths for the envelope columns.
  std::vector<int> envelope_ns;

  /// Header rate,exponent,alpha_star,envelope_n<k>...; 6 significant digits.
  std::string to_csv() const;
  Json to_json() const;
};

ExponentCurve exponent_curve(const QuantumChannel& channel, const std::vector<double>& rates,
                             const std::vector<double>& alphas, const OptimizerConfig& cfg,
                             const CovarianceCertificate& cert, std::vector<int> envelope_ns = {1, 2, 4, 8});

/// Largest grid alpha beta such that R > chi_alpha^* at every grid alpha <= beta, or none when
/// the first grid point already fails. The grid is scanned from 1 upwards, which visits the same
/// points as a downward scan. Throws DomainError when R <= capacity.
std::optional<double> critical_alpha(const QuantumChannel& channel, double rate, const std::vector<double>& alphas,
                                     const OptimizerConfig& cfg, const CovarianceCertificate& cert);

/// Variant reusing a computed profile and capacity.
std::optional<double> critical_alpha(const ChiProfile& profile, double rate, double capacity);

}  // namespace strongconv
