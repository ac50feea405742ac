#include "oracles.hpp"

#include "strongconv/channels.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/optimize.hpp"
#include "strongconv/random.hpp"

#include <doctest.h>

#include <cmath>

using namespace strongconv;

namespace {

OptimizerConfig small_config(int restarts = 8) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.multi_copy_restarts = 16;
  return cfg;
}

const double kChiDep = 1.0 - std::log2(8.0 / 5.0);

}  // namespace

TEST_CASE("config validation") {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = OptimizerConfig{};
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK_THROWS_AS(min_output_renyi(identity_channel(2), AlphaParam(2.0), cfg), DomainError);
}

TEST_CASE("minimum output entropy examples") {
  const auto cfg = small_config();
  for (double a : {1.0, 2.0, 5.0}) CHECK(std::abs(min_output_renyi(identity_channel(3), AlphaParam(a), cfg).value) < 1e-9);
  for (double r : {0.1, 0.5, 0.9}) {
    for (double a : {1.0, 1.2, 2.0, 3.0}) {
      const auto m = min_output_renyi(depolarizing(2, r), AlphaParam(a), cfg);
      CHECK(std::abs(m.value - oracle::depolarizing_min_output(r, a)) <= 1e-6);
    }
  }
  for (double a : {1.2, 1.5, 2.0}) CHECK(std::abs(min_output_renyi(werner_holevo(3), AlphaParam(a), cfg).value - 1.0) <= 1e-6);
}

TEST_CASE("minimum output entropy result invariants") {
  const auto cfg = small_config();
  Rng rng(3);
  const QuantumChannel ch = random_channel(3, 3, 2, rng);
  double prev = 1e300;
  for (double a : {1.0, 1.5, 2.0, 4.0}) {
    const auto m = min_output_renyi(ch, AlphaParam(a), cfg);
    CHECK(m.per_restart_values.size() == static_cast<std::size_t>(cfg.restarts));
    for (double v : m.per_restart_values) CHECK(m.value <= v + cfg.tolerance);
    CHECK(m.restarts_agreeing >= 1);
    const DensityMatrix out(hermitize(apply_kraus(ch.kraus(), m.argmin_state.matrix())), 1e-9);
    CHECK(std::abs(renyi_entropy(out, AlphaParam(a)) - m.value) <= 1e-9);
    CHECK(m.value <= prev + 1e-9);
    prev = m.value;
  }
}

TEST_CASE("minimum output entropy is deterministic for a seed") {
  Rng rng(4);
  const QuantumChannel ch = random_channel(3, 2, 3, rng);
  const auto a = min_output_renyi(ch, AlphaParam(2.0), small_config());
  const auto b = min_output_renyi(ch, AlphaParam(2.0), small_config());
  CHECK(a.value == b.value);
  CHECK(a.per_restart_values == b.per_restart_values);
}

TEST_CASE("covariant chi_alpha^* examples") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  CHECK(chi_alpha_star_covariant(id, AlphaParam(3.0), cfg, certify_named_channel(id)) == doctest::Approx(1.0));
  const auto dep = depolarizing(2, 0.5);
  CHECK(std::abs(chi_alpha_star_covariant(dep, AlphaParam(2.0), cfg, certify_named_channel(dep)) - kChiDep) < 1e-6);
  const auto wh = werner_holevo(3);
  for (double a : {1.2, 1.5, 2.0}) {
    CHECK(std::abs(chi_alpha_star_covariant(wh, AlphaParam(a), cfg, certify_named_channel(wh)) - (std::log2(3.0) - 1.0)) <
          1e-6);
  }
  CHECK_THROWS_AS(chi_alpha_star_covariant(dep, AlphaParam(2.0), cfg, CovarianceCertificate{}), NotCertified);
  CHECK_NOTHROW(chi_alpha_star_covariant(dep, AlphaParam(2.0), cfg, CovarianceCertificate::acknowledged_override()));
}

TEST_CASE("max output divergence") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  const auto r = max_output_divergence(id, DensityMatrix::maximally_mixed(2), AlphaParam(2.0), cfg);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK_FALSE(r.infinite);
  const auto inf = max_output_divergence(id, DensityMatrix::basis(2, 0), AlphaParam(2.0), cfg);
  CHECK(inf.infinite);
  CHECK(std::abs(inf.argmax(1)) == doctest::Approx(1.0));
  // The depolarizing output always has full support, so a singular sigma is infinite too.
  CHECK(max_output_divergence(depolarizing(2, 0.5), DensityMatrix::basis(2, 0), AlphaParam(1.0), cfg).infinite);
}

TEST_CASE("minimax bounds bracket the covariant value") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  const auto bi = chi_alpha_star_minimax_bounds(id, AlphaParam(2.0), cfg);
  CHECK(std::abs(bi.lower - 1.0) < 1e-3);
  CHECK(std::abs(bi.upper - 1.0) < 1e-3);

  const auto dep = depolarizing(2, 0.5);
  const auto bd = chi_alpha_star_minimax_bounds(dep, AlphaParam(2.0), cfg);
  CHECK(bd.lower <= bd.upper + 1e-9);
  CHECK(std::abs(bd.lower - kChiDep) < 1e-3);
  CHECK(std::abs(bd.upper - kChiDep) < 1e-3);

  Rng rng(5);
  const QuantumChannel ch = random_channel(2, 2, 2, rng);
  const auto br = chi_alpha_star_minimax_bounds(ch, AlphaParam(1.5), cfg);
  CHECK(br.lower <= br.upper + 1e-6);
}

TEST_CASE("optimal ensemble search examples") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  CHECK(optimal_ensemble_search(id, AlphaParam(2.0), 2, cfg).value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(optimal_ensemble_search(id, AlphaParam(1.0), 2, cfg).value == doctest::Approx(1.0).epsilon(1e-6));
  const auto dep = depolarizing(2, 0.5);
  const auto e = optimal_ensemble_search(dep, AlphaParam(2.0), 2, cfg);
  CHECK(std::abs(e.value - kChiDep) < 1e-6);
  CHECK(e.value <= kChiDep + 1e-6);
  CHECK(optimal_ensemble_search(dep, AlphaParam(2.0), 1, cfg).value == 0.0);
  CHECK_THROWS_AS(optimal_ensemble_search(dep, AlphaParam(2.0), 0, cfg), DomainError);

  const auto wh = werner_holevo(3);
  const auto ew = optimal_ensemble_search(wh, AlphaParam(1.5), 3, cfg);
  CHECK(ew.value <= std::log2(3.0) - 1.0 + 1e-6);
  CHECK(ew.value > std::log2(3.0) - 1.0 - 1e-4);
}

TEST_CASE("maximal distance property") {
  const auto cfg = small_config();
  const auto id = identity_channel(2);
  const auto ei = optimal_ensemble_search(id, AlphaParam(2.0), 2, cfg);
  const auto ri = maximal_distance_check(id, ei.ensemble, AlphaParam(2.0), cfg);
  CHECK(ri.gap <= 1e-6);
  CHECK(ri.passed);

  const auto dep = depolarizing(2, 0.5);
  const auto ed = optimal_ensemble_search(dep, AlphaParam(2.0), 2, cfg);
  CHECK(maximal_distance_check(dep, ed.ensemble, AlphaParam(2.0), cfg).passed);

  const Ensemble single({1.0}, {apply_channel(dep, DensityMatrix::basis(2, 0))});
  const auto rs = maximal_distance_check(dep, single, AlphaParam(2.0), cfg);
  CHECK(rs.gap > 1e-3);
  CHECK_FALSE(rs.passed);

  const Ensemble pure_single({1.0}, {DensityMatrix::basis(2, 0)});
  const auto rinf = maximal_distance_check(id, pure_single, AlphaParam(2.0), cfg);
  CHECK(rinf.infinite);
  CHECK_FALSE(rinf.passed);
}

TEST_CASE("additivity checks") {
  const auto cfg = small_config();
  const auto id = additivity_check(identity_channel(2), AlphaParam(2.0), 2, cfg);
  CHECK(std::abs(id.gap) < 1e-9);
  for (double r : {0.3, 0.7}) {
    const auto rep = additivity_check(depolarizing(2, r), AlphaParam(2.0), 2, cfg);
    CHECK(rep.subadditive);
    CHECK(rep.additive);
    CHECK(rep.claim_in_range);
  }
  const auto out_of_range = additivity_check(werner_holevo(3), AlphaParam(3.0), 2, cfg);
  CHECK_FALSE(out_of_range.claim_in_range);
  CHECK(out_of_range.subadditive);

  CHECK_THROWS_AS(additivity_check(identity_channel(2), AlphaParam(2.0), 4, cfg), DomainError);
  OptimizerConfig tight = cfg;
  tight.budget.max_dim = 8;
  CHECK_THROWS_AS(additivity_check(werner_holevo(3), AlphaParam(2.0), 2, tight), ResourceExceeded);
}
