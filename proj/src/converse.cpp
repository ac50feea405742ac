#include "strongconv/converse.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <iomanip>
#include <sstream>

namespace strongconv {

double capacity_covariant(const QuantumChannel& channel, const OptimizerConfig& cfg,
                          const CovarianceCertificate& cert) {
  return chi_alpha_star_covariant(channel, AlphaParam::von_neumann(), cfg, cert);
}

double capacity_covariant(const QuantumChannel& channel, const OptimizerConfig& cfg) {
  return capacity_covariant(channel, cfg, certify_named_channel(channel));
}

std::vector<double> default_alpha_grid(double alpha_max, int points) {
  const double lo = 1.0 + 1e-4;
  if (!(alpha_max > lo)) throw DomainError("default_alpha_grid: alpha_max must exceed 1 + 1e-4");
  if (points < 2) throw DomainError("default_alpha_grid: need at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = std::log(alpha_max / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo * std::exp(ratio * i);
  grid.back() = alpha_max;
  return grid;
}

void validate_alpha_grid(const QuantumChannel& channel, const std::vector<double>& alphas) {
  if (alphas.empty()) throw DomainError("alpha grid is empty");
  const double amax = additivity_alpha_max(channel);
  for (double a : alphas) {
    if (!(a > 1.0) || a > amax + 1e-12) {
      std::ostringstream msg;
      msg << "alpha " << a << " outside (1, " << amax << "] for channel '" << channel.label() << "'";
      throw DomainError(msg.str());
    }
  }
}

ChiProfile chi_alpha_star_profile(const QuantumChannel& channel, const std::vector<double>& alphas,
                                  const OptimizerConfig& cfg, const CovarianceCertificate& cert) {
  if (!cert.valid()) throw NotCertified("chi_alpha_star_profile: channel '" + channel.label() + "' is not certified");
  validate_alpha_grid(channel, alphas);
  ChiProfile p;
  p.alphas = alphas;
  const double log_dout = std::log2(static_cast<double>(channel.dim_out()));
  std::vector<Vector> warm;
  for (double a : alphas) {
    const MinOutputResult r = min_output_renyi(channel, AlphaParam(a), cfg, warm);
    p.chi.push_back(log_dout - r.value);
    warm.assign(1, r.argmin_vector);
  }
  return p;
}

ExponentResult exponent_from_profile(const ChiProfile& profile, double rate) {
  ExponentResult best;
  best.raw = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < profile.alphas.size(); ++i) {
    const double a = profile.alphas[i];
    const double v = (1.0 - 1.0 / a) * (rate - profile.chi[i]);
    if (v > best.raw) {
      best.raw = v;
      best.alpha_star = a;
    }
  }
  best.exponent = std::max(0.0, best.raw);
  return best;
}

ExponentResult strong_converse_exponent(const QuantumChannel& channel, double rate, const std::vector<double>& alphas,
                                        const OptimizerConfig& cfg, const CovarianceCertificate& cert) {
  return exponent_from_profile(chi_alpha_star_profile(channel, alphas, cfg, cert), rate);
}

double success_probability_envelope(int n, double exponent) {
  if (n < 1) throw DomainError("success_probability_envelope: n must be at least 1");
  if (!(exponent >= 0.0)) throw DomainError("success_probability_envelope: exponent must be nonnegative");
  return std::exp2(-static_cast<double>(n) * exponent);
}

std::string ExponentCurve::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "rate,exponent,alpha_star";
  for (int n : envelope_ns) os << ",envelope_n" << n;
  os << '\n';
  for (std::size_t i = 0; i < rate_grid.size(); ++i) {
    os << rate_grid[i] << ',' << exponent[i] << ',' << alpha_argmax[i];
    for (int n : envelope_ns) os << ',' << success_probability_envelope(n, exponent[i]);
    os << '\n';
  }
  return os.str();
}

Json ExponentCurve::to_json() const {
  Json rows = Json::array();
  for (std::size_t i = 0; i < rate_grid.size(); ++i) {
    Json env = Json::object();
    for (int n : envelope_ns) env[std::to_string(n)] = success_probability_envelope(n, exponent[i]);
    rows.push_back({{"rate", rate_grid[i]},
                    {"exponent", exponent[i]},
                    {"alpha_star", alpha_argmax[i]},
                    {"raw", raw[i]},
                    {"envelope", env}});
  }
  return Json{{"quantity", "exponent_curve"}, {"capacity", capacity}, {"rows", rows}};
}

ExponentCurve exponent_curve(const QuantumChannel& channel, const std::vector<double>& rates,
                             const std::vector<double>& alphas, const OptimizerConfig& cfg,
                             const CovarianceCertificate& cert, std::vector<int> envelope_ns) {
  const ChiProfile profile = chi_alpha_star_profile(channel, alphas, cfg, cert);
  ExponentCurve c;
  c.capacity = capacity_covariant(channel, cfg, cert);
  c.envelope_ns = std::move(envelope_ns);
  for (double r : rates) {
    const ExponentResult e = exponent_from_profile(profile, r);
    c.rate_grid.push_back(r);
    c.exponent.push_back(e.exponent);
    c.alpha_argmax.push_back(e.alpha_star);
    c.raw.push_back(e.raw);
  }
  return c;
}

std::optional<double> critical_alpha(const ChiProfile& profile, double rate, double capacity) {
  if (!(rate > capacity)) {
    std::ostringstream msg;
    msg << "critical_alpha: rate " << rate << " does not exceed the capacity " << capacity;
    throw DomainError(msg.str());
  }
  std::optional<double> beta;
  for (std::size_t i = 0; i < profile.alphas.size(); ++i) {
    if (!(rate > profile.chi[i])) break;
    beta = profile.alphas[i];
  }
  return beta;
}

std::optional<double> critical_alpha(const QuantumChannel& channel, double rate, const std::vector<double>& alphas,
                                     const OptimizerConfig& cfg, const CovarianceCertificate& cert) {
  const double capacity = capacity_covariant(channel, cfg, cert);
  if (!(rate > capacity)) return critical_alpha(ChiProfile{}, rate, capacity);
  return critical_alpha(chi_alpha_star_profile(channel, alphas, cfg, cert), rate, capacity);
}

}  // namespace strongconv
