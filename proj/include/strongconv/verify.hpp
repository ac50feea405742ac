#pragma once

#include "strongconv/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strongconv {

/// Outcome of one property check. `worst` is the extreme value observed, compared
/// against `threshold` in the direction the check names.
struct CheckResult {
  std::string suite;
  std::string name;
  int samples = 0;
  double worst = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

Json to_json(const CheckResult& c);

/// Suites: "qcore", "entropy", "channels", "optimize", "converse", "codesim".
std::vector<std::string> verify_suite_names();

/// Runs one suite, or every suite for "all". `samples` scales the random instance counts.
/// Throws DomainError for an unknown suite name or samples < 1.
std::vector<CheckResult> run_verify_suite(const std::string& suite, int samples, std::uint64_t seed);

// Individual property checks, shared with the acceptance driver.

/// min over `pairs` random state pairs and alpha in {1, 1.1, 1.5, 2, 3} of D_alpha(rho||sigma); passes at >= -1e-9.
CheckResult check_divergence_positivity(int pairs, std::uint64_t seed);
/// max |D(rho_XQ||rho_X sigma) - D(rho_XQ||rho_X mu) - D(mu||sigma)| over random triples; passes at <= 1e-9.
CheckResult check_decomposition_identity(int triples, std::uint64_t seed);
/// |D(rho_XQ||rho_X mu) - chi_alpha| at mu; passes at <= 1e-9.
CheckResult check_chi_minimizer_at_mu(int ensembles, std::uint64_t seed);
/// min of D(rho_XQ||rho_X sigma) - chi_alpha over random sigma; passes at >= -1e-9.
CheckResult check_chi_minimizer_elsewhere(int ensembles, std::uint64_t seed);
/// min ensemble_extension_gap over random (ensemble, rho0, eta, alpha); passes at >= -1e-9.
CheckResult check_extension_inequality(int samples, std::uint64_t seed);
/// min slack of tr(U A U^dagger B) inside trace_pairing_bounds over random PSD pairs and unitaries.
CheckResult check_trace_pairing(int dim, int pairs, int unitaries, std::uint64_t seed);

}  // namespace strongconv
