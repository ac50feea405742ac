#include "oracles.hpp"

#include "strongconv/channels.hpp"
#include "strongconv/converse.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace strongconv;

namespace {

OptimizerConfig small_config() {
  OptimizerConfig cfg;
  cfg.restarts = 6;
  return cfg;
}

// Closed-form chi_alpha^* of the qubit depolarizing channel.
double dep_chi(double r, double alpha) {
  return 1.0 - oracle::depolarizing_min_output(r, alpha);
}

}  // namespace

TEST_CASE("capacity examples") {
  const auto cfg = small_config();
  CHECK(capacity_covariant(identity_channel(2), cfg) == doctest::Approx(1.0));
  CHECK(std::abs(capacity_covariant(depolarizing(2, 0.5), cfg) - (1.0 - oracle::binary_entropy(0.75))) < 1e-8);
  CHECK(std::abs(capacity_covariant(depolarizing(2, 0.5), cfg) - 0.18872) < 1e-5);
  CHECK(std::abs(capacity_covariant(werner_holevo(3), cfg) - (std::log2(3.0) - 1.0)) < 1e-6);
  Rng rng(1);
  CHECK_THROWS_AS(capacity_covariant(random_channel(2, 2, 2, rng), cfg), NotCertified);
}

TEST_CASE("default alpha grid") {
  const auto g = default_alpha_grid(3.0);
  CHECK(g.size() == 64);
  CHECK(g.front() == doctest::Approx(1.0001));
  CHECK(g.back() == 3.0);
  for (std::size_t i = 2; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(g[1] / g[0]));
  CHECK_THROWS_AS(default_alpha_grid(1.0), DomainError);
  CHECK_THROWS_AS(validate_alpha_grid(werner_holevo(3), {1.5, 2.5}), DomainError);
  CHECK_THROWS_AS(validate_alpha_grid(depolarizing(2, 0.5), {1.0}), DomainError);
  CHECK_NOTHROW(validate_alpha_grid(depolarizing(2, 0.5), {1.5, 3.0}));
}

TEST_CASE("strong converse exponent examples") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  const auto cid = certify_named_channel(id);
  const auto e = strong_converse_exponent(id, 2.0, default_alpha_grid(64.0), cfg, cid);
  CHECK(e.exponent == doctest::Approx(1.0 - 1.0 / 64.0));
  CHECK(e.alpha_star == 64.0);
  CHECK(e.exponent < 1.0);

  const auto dep = depolarizing(2, 0.5);
  const auto cdep = certify_named_channel(dep);
  const auto grid = default_alpha_grid(3.0, 16);
  const double cap = capacity_covariant(dep, cfg, cdep);
  const auto at_cap = strong_converse_exponent(dep, cap, grid, cfg, cdep);
  CHECK(at_cap.exponent == 0.0);
  CHECK(at_cap.raw <= 1e-9);

  const auto e9 = strong_converse_exponent(dep, 0.9, grid, cfg, cdep);
  CHECK(e9.exponent > 0.0);
  double oracle_best = 0.0;
  for (double a : grid) oracle_best = std::max(oracle_best, (1.0 - 1.0 / a) * (0.9 - dep_chi(0.5, a)));
  CHECK(std::abs(e9.exponent - oracle_best) < 1e-6);
  CHECK(std::find(grid.begin(), grid.end(), e9.alpha_star) != grid.end());
}

TEST_CASE("chi profile and exponent curve properties") {
  const auto cfg = small_config();
  const auto dep = depolarizing(2, 0.3);
  const auto cert = certify_named_channel(dep);
  const auto grid = default_alpha_grid(3.0, 12);
  const auto profile = chi_alpha_star_profile(dep, grid, cfg, cert);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(profile.chi[i] - dep_chi(0.3, grid[i])) < 1e-6);
    if (i > 0) CHECK(profile.chi[i] >= profile.chi[i - 1] - 1e-9);
  }
  const double cap = capacity_covariant(dep, cfg, cert);
  std::vector<double> rates;
  for (int i = 0; i <= 10; ++i) rates.push_back(0.1 * i);
  const auto curve = exponent_curve(dep, rates, grid, cfg, cert, {1, 5});
  CHECK(curve.capacity == doctest::Approx(cap));
  for (std::size_t i = 0; i < rates.size(); ++i) {
    CHECK(curve.exponent[i] >= 0.0);
    if (rates[i] <= cap) CHECK(curve.exponent[i] == 0.0);
    if (rates[i] > cap + 0.01) CHECK(curve.exponent[i] > 0.0);
    if (i > 0) CHECK(curve.exponent[i] >= curve.exponent[i - 1]);
    CHECK(curve.alpha_argmax[i] > 1.0);
    CHECK(curve.alpha_argmax[i] <= 3.0);
  }
  const std::string csv = curve.to_csv();
  CHECK(csv.rfind("rate,exponent,alpha_star,envelope_n1,envelope_n5\n", 0) == 0);
  const Json j = curve.to_json();
  CHECK(j.at("rows").size() == rates.size());
}

TEST_CASE("envelope examples and multiplicativity") {
  for (int n : {1, 5, 30}) CHECK(success_probability_envelope(n, 0.0) == 1.0);
  CHECK(success_probability_envelope(4, 0.25) == doctest::Approx(0.5));
  for (int n = 1; n <= 6; ++n) CHECK(success_probability_envelope(n, 0.5) == doctest::Approx(std::exp2(-n / 2.0)));
  Rng rng(2);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int s = 0; s < 50; ++s) {
    const double e = u(rng);
    const int n1 = 1 + s % 7;
    const int n2 = 1 + s % 5;
    CHECK(std::abs(success_probability_envelope(n1 + n2, e) -
                   success_probability_envelope(n1, e) * success_probability_envelope(n2, e)) <= 1e-12);
  }
  CHECK_THROWS_AS(success_probability_envelope(0, 0.1), DomainError);
  CHECK_THROWS_AS(success_probability_envelope(1, -0.1), DomainError);
}

TEST_CASE("critical alpha examples") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  const auto cid = certify_named_channel(id);
  const auto grid = default_alpha_grid(64.0, 16);
  const auto beta = critical_alpha(id, 1.5, grid, cfg, cid);
  REQUIRE(beta.has_value());
  CHECK(*beta == 64.0);

  const auto dep = depolarizing(2, 0.5);
  const auto cdep = certify_named_channel(dep);
  const double cap = capacity_covariant(dep, cfg, cdep);
  const auto b2 = critical_alpha(dep, cap + 0.01, default_alpha_grid(3.0, 32), cfg, cdep);
  REQUIRE(b2.has_value());
  CHECK(*b2 > 1.0);
  CHECK(dep_chi(0.5, *b2) < cap + 0.01);
  CHECK_THROWS_AS(critical_alpha(dep, cap, default_alpha_grid(3.0, 8), cfg, cdep), DomainError);

  ChiProfile fake{{1.1, 1.5}, {0.5, 0.6}};
  CHECK_FALSE(critical_alpha(fake, 0.45, 0.4).has_value());
  CHECK(*critical_alpha(fake, 0.55, 0.4) == 1.1);
}
