#include "strongconv/entropy.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace strongconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Weight of rho outside supp(sigma) above which D is infinite.
constexpr double kSupportLeak = 1e-10;

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}

double support_leak(const Matrix& rho, const Spectrum& sigma) {
  const Matrix outside = Matrix::Identity(rho.rows(), rho.cols()) - support_projector(sigma);
  return (outside * rho).trace().real();
}

Matrix power_psd(const Spectrum& s, double p) {
  return apply_function(s, [p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; });
}

}  // namespace

AlphaParam::AlphaParam(double value) : value_(value) {
  if (!std::isfinite(value) || value < 1.0) {
    throw DomainError("alpha must be a finite value >= 1, got " + std::to_string(value));
  }
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double renyi_entropy_of_spectrum(const RealVector& eigenvalues, AlphaParam alpha) {
  if (alpha.is_von_neumann()) {
    double s = 0.0;
    for (double l : eigenvalues) {
      if (l > 0.0) s -= l * std::log2(l);
    }
    return s;
  }
  const double a = alpha.value();
  double tr = 0.0;
  for (double l : eigenvalues) {
    if (l > 0.0) tr += std::pow(l, a);
  }
  return std::log2(tr) / (1.0 - a);
}

double renyi_entropy(const DensityMatrix& state, AlphaParam alpha) {
  return renyi_entropy_of_spectrum(eigh(state.matrix()).values, alpha);
}

double alpha_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, AlphaParam alpha) {
  require_same_dim(rho, sigma, "alpha_relative_entropy");
  const Spectrum ss = eigh(sigma.matrix());
  if (support_leak(rho.matrix(), ss) > kSupportLeak) return kInf;
  const Spectrum rs = eigh(rho.matrix());
  if (alpha.is_von_neumann()) {
    double s = 0.0;
    for (double l : rs.values) {
      if (l > 0.0) s += l * std::log(l);
    }
    const Matrix log_sigma = apply_on_support(ss, [](double x) { return std::log(x); });
    s -= (rho.matrix() * log_sigma).trace().real();
    return s / kLn2;
  }
  const double a = alpha.value();
  const Matrix rho_a = power_psd(rs, a);
  const Matrix sigma_p = pseudo_power(ss, 1.0 - a);
  const double tr = (rho_a * sigma_p).trace().real();
  return std::log2(tr) / (a - 1.0);
}

double holevo_chi(const Ensemble& ens) {
  double avg_entropy = 0.0;
  for (std::size_t x = 0; x < ens.size(); ++x) {
    if (ens.probs()[x] > 0.0) avg_entropy += ens.probs()[x] * renyi_entropy(ens.states()[x], AlphaParam::von_neumann());
  }
  return renyi_entropy(ens.average(), AlphaParam::von_neumann()) - avg_entropy;
}

namespace {

// sum_x p_x rho_x^alpha
Matrix alpha_moment(const Ensemble& ens, double a) {
  Matrix acc = Matrix::Zero(ens.dim(), ens.dim());
  for (std::size_t x = 0; x < ens.size(); ++x) {
    if (ens.probs()[x] <= 0.0) continue;
    acc += ens.probs()[x] * power_psd(eigh(ens.states()[x].matrix()), a);
  }
  return hermitize(acc);
}

}  // namespace

double chi_alpha(const Ensemble& ens, AlphaParam alpha) {
  if (alpha.is_von_neumann()) return holevo_chi(ens);
  const double a = alpha.value();
  const RealVector z = eigh(alpha_moment(ens, a)).values;
  double tr = 0.0;
  for (double l : z) {
    if (l > 0.0) tr += std::pow(l, 1.0 / a);
  }
  return a / (a - 1.0) * std::log2(tr);
}

DensityMatrix mu_state(const Ensemble& ens, AlphaParam alpha) {
  if (alpha.is_von_neumann()) return ens.average();
  const double a = alpha.value();
  Matrix zeta = power_psd(eigh(alpha_moment(ens, a)), 1.0 / a);
  zeta /= zeta.trace().real();
  return DensityMatrix(hermitize(zeta), 1e-9);
}

double cq_relative_entropy(const Ensemble& ens, const DensityMatrix& sigma, AlphaParam alpha) {
  if (sigma.dim() != ens.dim()) throw DimensionMismatch("cq_relative_entropy: dimension mismatch");
  const Spectrum ss = eigh(sigma.matrix());
  for (std::size_t x = 0; x < ens.size(); ++x) {
    if (ens.probs()[x] > 0.0 && support_leak(ens.states()[x].matrix(), ss) > kSupportLeak) return kInf;
  }
  if (alpha.is_von_neumann()) {
    double total = 0.0;
    for (std::size_t x = 0; x < ens.size(); ++x) {
      if (ens.probs()[x] > 0.0) {
        total += ens.probs()[x] * alpha_relative_entropy(ens.states()[x], sigma, alpha);
      }
    }
    return total;
  }
  const double a = alpha.value();
  const double tr = (alpha_moment(ens, a) * pseudo_power(ss, 1.0 - a)).trace().real();
  return std::log2(tr) / (a - 1.0);
}

double decomposition_residual(const Ensemble& ens, const DensityMatrix& sigma, AlphaParam alpha) {
  const DensityMatrix mu = mu_state(ens, alpha);
  const double d_sigma = cq_relative_entropy(ens, sigma, alpha);
  const double d_mu = cq_relative_entropy(ens, mu, alpha);
  const double d_mu_sigma = alpha_relative_entropy(mu, sigma, alpha);
  if (!std::isfinite(d_sigma) || !std::isfinite(d_mu) || !std::isfinite(d_mu_sigma)) return kInf;
  return std::abs(d_sigma - d_mu - d_mu_sigma);
}

double gallager_e0(double s, const Ensemble& ens) {
  if (!(s > -1.0 && s < 0.0)) {
    throw DomainError("gallager_e0: s must lie in (-1, 0), got " + std::to_string(s));
  }
  return s * chi_alpha(ens, AlphaParam(1.0 / (s + 1.0)));
}

Ensemble extend_ensemble(const Ensemble& ens, const DensityMatrix& rho0, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("eta must lie in [0, 1]");
  if (rho0.dim() != ens.dim()) throw DimensionMismatch("extend_ensemble: dimension mismatch");
  std::vector<double> probs;
  std::vector<DensityMatrix> states = ens.states();
  for (double p : ens.probs()) probs.push_back((1.0 - eta) * p);
  probs.push_back(eta);
  states.push_back(rho0);
  double total = 0.0;
  for (double p : probs) total += p;
  *std::max_element(probs.begin(), probs.end()) += 1.0 - total;
  return Ensemble(std::move(probs), std::move(states));
}

double ensemble_extension_gap(const Ensemble& ens, const DensityMatrix& rho0, double eta, AlphaParam alpha) {
  const Ensemble ext = extend_ensemble(ens, rho0, eta);
  const double chi = chi_alpha(ens, alpha);
  const double chi_ext = chi_alpha(ext, alpha);
  if (eta == 0.0) return chi_ext - chi;
  const double d = alpha_relative_entropy(rho0, mu_state(ext, alpha), alpha);
  return chi_ext - chi - eta * (d - chi);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  const RealVector ev = eigh(rho.matrix() - sigma.matrix()).values;
  return 0.5 * ev.cwiseAbs().sum();
}

}  // namespace strongconv
