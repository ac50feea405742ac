#pragma once

#include "strongconv/qcore.hpp"

namespace strongconv {

/// Renyi order alpha >= 1. alpha == 1 is a distinguished flag that routes every
/// quantity to its von Neumann formula; no alpha-formula ever divides by alpha - 1 = 0.
class AlphaParam {
 public:
  /// Throws DomainError for alpha < 1 or non-finite alpha.
  explicit AlphaParam(double value);
  static AlphaParam von_neumann() { return AlphaParam(1.0); }

  double value() const { return value_; }
  bool is_von_neumann() const { return value_ == 1.0; }

 private:
  double value_;
};

/// Binary entropy in bits; h(0) = h(1) = 0.
double binary_entropy(double p);

/// S_alpha of a probability vector (entries clamped at 0), in bits.
double renyi_entropy_of_spectrum(const RealVector& eigenvalues, AlphaParam alpha);

/// alpha > 1: log2 tr(rho^alpha) / (1 - alpha); alpha = 1: -tr(rho log2 rho).
double renyi_entropy(const DensityMatrix& state, AlphaParam alpha);

/// D_alpha(rho || sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
/// alpha > 1: log2 tr(rho^alpha sigma^{1-alpha}) / (alpha - 1) with sigma inverted on its support.
/// alpha = 1: quantum relative entropy.
double alpha_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, AlphaParam alpha);

/// S(sum_x p_x sigma_x) - sum_x p_x S(sigma_x), base 2.
double holevo_chi(const Ensemble& ens);

/// alpha/(alpha-1) log2 tr[(sum_x p_x sigma_x^alpha)^{1/alpha}]; delegates to holevo_chi at alpha = 1.
double chi_alpha(const Ensemble& ens, AlphaParam alpha);

/// zeta / tr(zeta) with zeta = (sum_x p_x rho_x^alpha)^{1/alpha}. At alpha = 1 this is the
/// average state, the limit of the same expression.
DensityMatrix mu_state(const Ensemble& ens, AlphaParam alpha);

/// D_alpha(rho_XQ || rho_X (x) sigma) for the cq-state of `ens`, evaluated member by member:
/// log2 tr(sum_x p_x rho_x^alpha sigma^{1-alpha}) / (alpha - 1). +infinity on support violation.
double cq_relative_entropy(const Ensemble& ens, const DensityMatrix& sigma, AlphaParam alpha);

/// |D(rho_XQ||rho_X (x) sigma) - D(rho_XQ||rho_X (x) mu) - D(mu||sigma)|. +infinity whenever
/// one of the divergences is infinite.
double decomposition_residual(const Ensemble& ens, const DensityMatrix& sigma, AlphaParam alpha);

/// E_0(s) = s * chi_{1/(s+1)}(ens) for -1 < s < 0.
double gallager_e0(double s, const Ensemble& ens);

/// Ensemble extended by one extra symbol: probabilities (1-eta) p_x and eta, with rho0 appended.
Ensemble extend_ensemble(const Ensemble& ens, const DensityMatrix& rho0, double eta);

/// chi(ext) - chi(ens) - eta (D(rho0 || mu(ext)) - chi(ens)) for ext = extend_ensemble(ens, rho0, eta).
/// Nonnegative for every valid input; the eta term is dropped at eta = 0.
double ensemble_extension_gap(const Ensemble& ens, const DensityMatrix& rho0, double eta, AlphaParam alpha);

/// ||rho - sigma||_1 / 2
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace strongconv
