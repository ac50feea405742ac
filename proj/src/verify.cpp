#include "strongconv/verify.hpp"

#include "strongconv/channels.hpp"
#include "strongconv/codesim.hpp"
#include "strongconv/converse.hpp"
#include "strongconv/entropy.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/optimize.hpp"
#include "strongconv/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace strongconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::array<double, 5> kAlphas{1.0, 1.1, 1.5, 2.0, 3.0};

CheckResult make_check(std::string suite, std::string name, int samples, double worst, double threshold,
                       bool passed) {
  return CheckResult{std::move(suite), std::move(name), samples, worst, threshold, passed};
}

int random_dim(Rng& rng) {
  return std::uniform_int_distribution<int>(2, 4)(rng);
}

AlphaParam random_alpha(Rng& rng) {
  return AlphaParam(kAlphas[std::uniform_int_distribution<std::size_t>(0, kAlphas.size() - 1)(rng)]);
}

CheckResult lower_check(std::string suite, std::string name, int samples, double min_value, double floor) {
  return make_check(std::move(suite), std::move(name), samples, min_value, floor, min_value >= floor);
}

CheckResult upper_check(std::string suite, std::string name, int samples, double max_value, double ceiling) {
  return make_check(std::move(suite), std::move(name), samples, max_value, ceiling, max_value <= ceiling);
}

// ------------------------------------------------------------------ suites

std::vector<CheckResult> qcore_suite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(derive_seed(seed, 100));
  double worst_state = 0.0;
  double worst_choi = 0.0;
  double worst_tensor = 0.0;
  const int count = std::min(samples, 200);
  for (int s = 0; s < count; ++s) {
    const int din = random_dim(rng);
    const int dout = random_dim(rng);
    const int nk = std::uniform_int_distribution<int>((din + dout - 1) / dout, 4)(rng);
    const QuantumChannel ch = random_channel(din, dout, nk, rng);
    const DensityMatrix rho = random_state(din, rng);
    const Matrix out_m = apply_kraus(ch.kraus(), rho.matrix());
    worst_state = std::max({worst_state, -min_eigenvalue(out_m), std::abs(out_m.trace().real() - 1.0),
                            max_abs(out_m - out_m.adjoint())});
    worst_choi = std::max(worst_choi, -min_eigenvalue(choi_matrix(ch)));
    if (s < 20 && din == 2) {
      const Matrix x = random_state(4, rng).matrix();
      const QuantumChannel two = tensor_power(ch, 2);
      worst_tensor = std::max(worst_tensor, max_abs(apply_kraus(two.kraus(), x) - apply_tensor_power(ch, 2, x)));
    }
  }
  out.push_back(upper_check("qcore", "channel output is a state", count, worst_state, 1e-10));
  out.push_back(upper_check("qcore", "choi matrix is PSD", count, worst_choi, 1e-10));
  out.push_back(upper_check("qcore", "sitewise tensor power matches explicit Kraus family", count, worst_tensor, 1e-12));
  for (int d = 2; d <= 4; ++d) {
    CheckResult c = check_trace_pairing(d, std::max(1, samples / 10), 10, derive_seed(seed, 200 + d));
    c.suite = "qcore";
    out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> entropy_suite(int samples, std::uint64_t seed) {
  const int tenth = std::max(10, samples / 10);
  std::vector<CheckResult> out{
      check_divergence_positivity(samples, derive_seed(seed, 1)),
      check_decomposition_identity(tenth, derive_seed(seed, 2)),
      check_chi_minimizer_at_mu(tenth, derive_seed(seed, 3)),
      check_chi_minimizer_elsewhere(tenth, derive_seed(seed, 4)),
      check_extension_inequality(std::max(10, samples / 5), derive_seed(seed, 5)),
  };
  Rng rng(derive_seed(seed, 6));
  double worst_mono = 0.0;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_state(random_dim(rng), rng);
    double prev = kInf;
    for (double a : kAlphas) {
      const double v = renyi_entropy(rho, AlphaParam(a));
      worst_mono = std::max(worst_mono, v - prev);
      prev = v;
    }
  }
  out.push_back(upper_check("entropy", "renyi entropy nonincreasing in alpha", samples, worst_mono, 1e-12));
  return out;
}

std::vector<CheckResult> channels_suite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const int count = std::clamp(samples / 10, 5, 50);
  struct Case {
    std::string name;
    QuantumChannel channel;
    GroupRep group;
  };
  std::vector<Case> cases{
      {"depolarizing(2, 0.5)", depolarizing(2, 0.5), weyl_heisenberg_group(2)},
      {"depolarizing(3, 0.3)", depolarizing(3, 0.3), weyl_heisenberg_group(3)},
      {"werner-holevo(3)", werner_holevo(3), conjugate_haar_pairs(3)},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto cov = check_covariance(cases[i].channel, cases[i].group, count, derive_seed(seed, 300 + i));
    const auto irr = check_irreducibility(cases[i].group, RepSide::Output, count, derive_seed(seed, 310 + i));
    out.push_back(upper_check("channels", cases[i].name + " covariant", count, cov.max_residual, 1e-8));
    out.push_back(upper_check("channels", cases[i].name + " irreducible", count, irr.max_residual, 1e-8));
  }
  for (int d = 2; d <= 3; ++d) {
    const auto irr = check_irreducibility(trivial_group(d), RepSide::Output, count, derive_seed(seed, 320 + d));
    out.push_back(make_check("channels", "trivial group on d=" + std::to_string(d) + " is reducible", count,
                             irr.max_residual, 1e-8, !irr.passed));
  }
  return out;
}

std::vector<CheckResult> optimize_suite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  OptimizerConfig cfg;
  cfg.restarts = std::clamp(samples / 25, 4, 16);
  cfg.multi_copy_restarts = std::clamp(samples / 10, 8, 32);
  cfg.seed = derive_seed(seed, 400);

  double worst_closed = 0.0;
  double worst_witness = 0.0;
  double worst_mono = 0.0;
  for (double r : {0.3, 0.7}) {
    const QuantumChannel ch = depolarizing(2, r);
    double prev = kInf;
    for (double a : {1.2, 1.5, 2.0, 3.0}) {
      const MinOutputResult m = min_output_renyi(ch, AlphaParam(a), cfg);
      const double p = (1.0 + r) / 2.0;
      const double exact = std::log2(std::pow(p, a) + std::pow(1.0 - p, a)) / (1.0 - a);
      worst_closed = std::max(worst_closed, std::abs(m.value - exact));
      const Matrix w = apply_kraus(ch.kraus(), m.argmin_state.matrix());
      worst_witness = std::max(worst_witness, std::abs(renyi_entropy(DensityMatrix(hermitize(w), 1e-9), AlphaParam(a)) - m.value));
      worst_mono = std::max(worst_mono, m.value - prev);
      prev = m.value;
    }
  }
  out.push_back(upper_check("optimize", "depolarizing minimum output entropy closed form", 8, worst_closed, 1e-6));
  out.push_back(upper_check("optimize", "witness reproduces value", 8, worst_witness, 1e-9));
  out.push_back(upper_check("optimize", "minimum output entropy nonincreasing in alpha", 8, worst_mono, 1e-9));

  double worst_sub = kInf;
  const QuantumChannel dep = depolarizing(2, 0.3);
  for (double a : {1.5, 2.0}) {
    worst_sub = std::min(worst_sub, additivity_check(dep, AlphaParam(a), 2, cfg).gap);
  }
  out.push_back(lower_check("optimize", "two-copy subadditivity", 2, worst_sub, -1e-6));

  const auto wh = werner_holevo(3);
  const double wh_value = min_output_renyi(wh, AlphaParam(1.5), cfg).value;
  out.push_back(upper_check("optimize", "werner-holevo(3) minimum output entropy is 1", 1, std::abs(wh_value - 1.0), 1e-6));
  return out;
}

std::vector<CheckResult> converse_suite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  OptimizerConfig cfg;
  cfg.restarts = std::clamp(samples / 25, 4, 16);
  cfg.seed = derive_seed(seed, 500);
  const QuantumChannel ch = depolarizing(2, 0.5);
  const auto cert = certify_named_channel(ch);
  const auto grid = default_alpha_grid(additivity_alpha_max(ch), 16);
  const ChiProfile profile = chi_alpha_star_profile(ch, grid, cfg, cert);
  const double cap = capacity_covariant(ch, cfg, cert);

  double worst_chi = 0.0;
  for (std::size_t i = 1; i < profile.chi.size(); ++i) worst_chi = std::max(worst_chi, profile.chi[i - 1] - profile.chi[i]);
  out.push_back(upper_check("converse", "chi_alpha^* nondecreasing on grid", static_cast<int>(grid.size()), worst_chi, 1e-9));

  double worst_curve = 0.0;
  double prev = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double e = exponent_from_profile(profile, 0.1 * i).exponent;
    worst_curve = std::max(worst_curve, prev - e);
    prev = e;
  }
  out.push_back(upper_check("converse", "exponent nondecreasing in rate", 21, worst_curve, 0.0));

  const double above = exponent_from_profile(profile, cap + 0.01).exponent;
  out.push_back(make_check("converse", "exponent positive above capacity + 0.01", 1, above, 0.0, above > 0.0));

  Rng rng(derive_seed(seed, 501));
  std::uniform_real_distribution<double> unit(0.0, 2.0);
  double worst_mult = 0.0;
  for (int s = 0; s < samples; ++s) {
    const int n1 = std::uniform_int_distribution<int>(1, 20)(rng);
    const int n2 = std::uniform_int_distribution<int>(1, 20)(rng);
    const double e = unit(rng);
    worst_mult = std::max(worst_mult, std::abs(success_probability_envelope(n1 + n2, e) -
                                               success_probability_envelope(n1, e) * success_probability_envelope(n2, e)));
  }
  out.push_back(upper_check("converse", "envelope multiplicative in n", samples, worst_mult, 1e-12));
  return out;
}

std::vector<CheckResult> codesim_suite(int samples, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Rng rng(derive_seed(seed, 600));
  double worst_povm = 0.0;
  bool all_valid = true;
  for (int s = 0; s < samples; ++s) {
    const int d = random_dim(rng);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<DensityMatrix> states;
    for (int x = 0; x < m; ++x) {
      const int rank = std::uniform_int_distribution<int>(1, d)(rng);
      states.push_back(random_state_of_rank(d, rank, rng));
    }
    try {
      const Povm povm = pgm_decoder(states);
      Matrix total = Matrix::Zero(d, d);
      for (const auto& e : povm.elements()) {
        total += e;
        worst_povm = std::max(worst_povm, -min_eigenvalue(e));
      }
      worst_povm = std::max(worst_povm, max_abs(total - Matrix::Identity(d, d)));
    } catch (const InvariantViolation&) {
      all_valid = false;
    }
  }
  out.push_back(make_check("codesim", "PGM is a valid POVM", samples, worst_povm, 1e-9, all_valid && worst_povm <= 1e-9));

  const QuantumChannel id = identity_channel(2);
  double worst_bound = -kInf;
  const int books = std::clamp(samples / 20, 2, 20);
  for (int n = 1; n <= 3; ++n) {
    const SimResult r = run_experiment(id, n, 1.5, books, Generation::EntangledRandom, derive_seed(seed, 610 + n), 0.0);
    worst_bound = std::max(worst_bound, r.p_succ_max - std::exp2(-n * 0.5));
  }
  out.push_back(upper_check("codesim", "identity channel success below 2^{-n(R-1)}", 3 * books, worst_bound, 1e-9));

  const Codebook orth = make_codebook(2, 2, 1.0, Generation::Orthogonal, seed);
  const double p_orth = pgm_success_probability(depolarizing(2, 1.0), orth);
  out.push_back(upper_check("codesim", "orthogonal codebook decoded perfectly", 1, std::abs(1.0 - p_orth), 1e-12));
  return out;
}

}  // namespace

Json to_json(const CheckResult& c) {
  return Json{{"suite", c.suite},  {"name", c.name},           {"samples", c.samples},
              {"worst", c.worst},  {"threshold", c.threshold}, {"pass", c.passed}};
}

std::vector<std::string> verify_suite_names() {
  return {"qcore", "entropy", "channels", "optimize", "converse", "codesim"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify: samples must be at least 1");
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : verify_suite_names()) {
      auto part = run_verify_suite(name, samples, seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "qcore") return qcore_suite(samples, seed);
  if (suite == "entropy") return entropy_suite(samples, seed);
  if (suite == "channels") return channels_suite(samples, seed);
  if (suite == "optimize") return optimize_suite(samples, seed);
  if (suite == "converse") return converse_suite(samples, seed);
  if (suite == "codesim") return codesim_suite(samples, seed);
  throw DomainError("unknown verify suite '" + suite + "'");
}

// ------------------------------------------------------------------ shared checks

CheckResult check_divergence_positivity(int pairs, std::uint64_t seed) {
  Rng rng(seed);
  double worst = kInf;
  for (int s = 0; s < pairs; ++s) {
    const int d = random_dim(rng);
    const DensityMatrix rho = random_state_of_rank(d, std::uniform_int_distribution<int>(1, d)(rng), rng);
    const DensityMatrix sigma = random_state(d, rng);
    for (double a : kAlphas) worst = std::min(worst, alpha_relative_entropy(rho, sigma, AlphaParam(a)));
  }
  return lower_check("entropy", "D_alpha nonnegative", pairs, worst, -1e-9);
}

CheckResult check_decomposition_identity(int triples, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < triples; ++s) {
    const int d = random_dim(rng);
    const Ensemble ens = random_ensemble(std::uniform_int_distribution<int>(2, 4)(rng), d, rng);
    const DensityMatrix sigma = random_state(d, rng);
    worst = std::max(worst, decomposition_residual(ens, sigma, random_alpha(rng)));
  }
  return upper_check("entropy", "decomposition identity residual", triples, worst, 1e-9);
}

CheckResult check_chi_minimizer_at_mu(int ensembles, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < ensembles; ++s) {
    const Ensemble ens = random_ensemble(std::uniform_int_distribution<int>(2, 4)(rng), random_dim(rng), rng);
    const AlphaParam a = random_alpha(rng);
    worst = std::max(worst, std::abs(cq_relative_entropy(ens, mu_state(ens, a), a) - chi_alpha(ens, a)));
  }
  return upper_check("entropy", "chi_alpha attained at mu", ensembles, worst, 1e-9);
}

CheckResult check_chi_minimizer_elsewhere(int ensembles, std::uint64_t seed) {
  Rng rng(seed);
  double worst = kInf;
  for (int s = 0; s < ensembles; ++s) {
    const int d = random_dim(rng);
    const Ensemble ens = random_ensemble(std::uniform_int_distribution<int>(2, 4)(rng), d, rng);
    const AlphaParam a = random_alpha(rng);
    const double chi = chi_alpha(ens, a);
    for (int t = 0; t < 5; ++t) worst = std::min(worst, cq_relative_entropy(ens, random_state(d, rng), a) - chi);
  }
  return lower_check("entropy", "chi_alpha below cq divergence at other sigma", ensembles, worst, -1e-9);
}

CheckResult check_extension_inequality(int samples, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = kInf;
  for (int s = 0; s < samples; ++s) {
    const int d = random_dim(rng);
    const Ensemble ens = random_ensemble(std::uniform_int_distribution<int>(1, 4)(rng), d, rng);
    const DensityMatrix rho0 = random_state(d, rng);
    worst = std::min(worst, ensemble_extension_gap(ens, rho0, unit(rng), random_alpha(rng)));
  }
  return lower_check("entropy", "ensemble extension inequality", samples, worst, -1e-9);
}

CheckResult check_trace_pairing(int dim, int pairs, int unitaries, std::uint64_t seed) {
  Rng rng(seed);
  double worst = kInf;
  for (int s = 0; s < pairs; ++s) {
    const Matrix a = random_psd(dim, rng);
    const Matrix b = random_psd(dim, rng);
    const TracePairing bounds = trace_pairing_bounds(a, b);
    for (int u = 0; u < unitaries; ++u) {
      const Matrix w = haar_unitary(dim, rng);
      const double v = (w * a * w.adjoint() * b).trace().real();
      worst = std::min({worst, v - bounds.lower, bounds.upper - v});
    }
  }
  return lower_check("linalg", "trace pairing within majorization bounds (d=" + std::to_string(dim) + ")",
                     pairs * unitaries, worst, -1e-9);
}

}  // namespace strongconv
