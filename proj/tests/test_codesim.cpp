#include "strongconv/channels.hpp"
#include "strongconv/codesim.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace strongconv;

namespace {

std::vector<DensityMatrix> outputs_of(const QuantumChannel& ch, const Codebook& code) {
  std::vector<DensityMatrix> outs;
  for (const auto& psi : code.codewords) {
    outs.emplace_back(hermitize(apply_tensor_power(ch, code.n, psi * psi.adjoint())), 1e-9);
  }
  return outs;
}

}  // namespace

TEST_CASE("message count and codebook shape") {
  CHECK(message_count(1, 0.0) == 1);
  CHECK(message_count(2, 1.0) == 4);
  CHECK(message_count(1, 1.5) == 3);
  CHECK(message_count(5, 0.9) == 23);
  CHECK(message_count(6, 2.0) == 4096);
  CHECK_THROWS_AS(message_count(0, 1.0), DomainError);
  CHECK_THROWS_AS(message_count(1, -1.0), DomainError);

  const auto code = make_codebook(2, 3, 1.0, Generation::EntangledRandom, 5);
  CHECK(code.size() == 8);
  CHECK(code.effective_rate() == doctest::Approx(1.0));
  for (const auto& c : code.codewords) {
    CHECK(c.size() == 8);
    CHECK(c.norm() == doctest::Approx(1.0));
  }
  const auto code15 = make_codebook(2, 1, 1.5, Generation::EntangledRandom, 5);
  CHECK(code15.effective_rate() >= 1.5);

  ResourceBudget tight;
  tight.max_dim = 16;
  CHECK_THROWS_AS(make_codebook(2, 5, 1.0, Generation::EntangledRandom, 1, tight), ResourceExceeded);
  CHECK(generation_from_string("product-random") == Generation::ProductRandom);
  CHECK_THROWS_AS(generation_from_string("nope"), ParseError);
}

TEST_CASE("product codewords are tensor products") {
  const auto code = make_codebook(2, 2, 1.0, Generation::ProductRandom, 9);
  for (const auto& c : code.codewords) {
    // A product vector reshaped to 2x2 has rank one.
    Matrix m(2, 2);
    m << c(0), c(1), c(2), c(3);
    CHECK(std::abs(m.determinant()) < 1e-12);
  }
}

TEST_CASE("pgm decoder examples") {
  const auto p = pgm_decoder({DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)});
  CHECK(max_abs(p.elements()[0] - DensityMatrix::basis(2, 0).matrix()) < 1e-12);
  CHECK(max_abs(p.elements()[1] - DensityMatrix::basis(2, 1).matrix()) < 1e-12);

  Rng rng(1);
  const auto sigma = random_state(2, rng);
  const auto same = pgm_decoder({sigma, sigma});
  double succ = 0.0;
  for (int x = 0; x < 2; ++x) succ += 0.5 * (same.elements()[x] * sigma.matrix()).trace().real();
  CHECK(succ == doctest::Approx(0.5));

  // Rank-deficient sum: the kernel projector goes to element 0.
  const auto partial = pgm_decoder({DensityMatrix::basis(3, 0), DensityMatrix::basis(3, 1)});
  CHECK(partial.elements()[0](2, 2).real() == doctest::Approx(1.0));
  CHECK_THROWS_AS(pgm_decoder({}), DomainError);
  CHECK_THROWS_AS(pgm_decoder({DensityMatrix::basis(2, 0), DensityMatrix::basis(3, 0)}), DimensionMismatch);
}

TEST_CASE("pgm decoder is always a valid POVM") {
  Rng rng(2);
  for (int s = 0; s < 500; ++s) {
    const int d = std::uniform_int_distribution<int>(2, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<DensityMatrix> states;
    for (int x = 0; x < m; ++x) states.push_back(random_state_of_rank(d, std::uniform_int_distribution<int>(1, d)(rng), rng));
    CHECK_NOTHROW(pgm_decoder(states));
  }
}

TEST_CASE("exact success probability examples") {
  const auto id = identity_channel(2);
  const auto orth = make_codebook(2, 2, 1.0, Generation::Orthogonal, 0);
  const auto dec = pgm_decoder(outputs_of(id, orth));
  CHECK(exact_success_probability(id, orth, dec) == doctest::Approx(1.0));

  const auto four = make_codebook(2, 1, 2.0, Generation::EntangledRandom, 3);
  CHECK(exact_success_probability(id, four, pgm_decoder(outputs_of(id, four))) <= 0.5 + 1e-9);

  const auto one = make_codebook(2, 2, 0.0, Generation::EntangledRandom, 4);
  CHECK(one.size() == 1);
  CHECK(exact_success_probability(depolarizing(2, 0.5), one, Povm({Matrix::Identity(4, 4)})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(exact_success_probability(id, one, Povm({Matrix::Identity(2, 2)})), DimensionMismatch);
}

TEST_CASE("fast PGM success equals the explicit POVM evaluation") {
  const auto dep = depolarizing(2, 0.5);
  Rng rng(5);
  const QuantumChannel unitary(2, 2, {haar_unitary(2, rng)});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const QuantumChannel* ch : {&dep, &unitary}) {
      const auto code = make_codebook(2, 3, 0.9, Generation::EntangledRandom, seed);
      const double slow = exact_success_probability(*ch, code, pgm_decoder(outputs_of(*ch, code)));
      const double fast = pgm_success_probability(*ch, code);
      CHECK(std::abs(slow - fast) < 1e-10);
      CHECK(fast >= 0.0);
      CHECK(fast <= 1.0);
    }
  }
}

TEST_CASE("run_experiment examples and reproducibility") {
  const auto id = identity_channel(2);
  for (int n = 1; n <= 4; ++n) {
    const auto r = run_experiment(id, n, 1.5, 10, Generation::EntangledRandom, 100 + n, 0.5);
    CHECK(r.p_succ_max <= std::exp2(-n * 0.5) + 1e-9);
    CHECK(r.pass);
    CHECK(r.p_succ_min <= r.p_succ_hat);
    CHECK(r.p_succ_hat <= r.p_succ_max);
    CHECK(r.stderr_ >= 0.0);
  }
  const auto zero = run_experiment(depolarizing(2, 0.5), 2, 0.0, 3, Generation::EntangledRandom, 1, 0.0);
  CHECK(zero.p_succ_hat == doctest::Approx(1.0));
  CHECK(zero.envelope == 1.0);

  const auto a = run_experiment(depolarizing(2, 0.5), 3, 0.9, 5, Generation::ProductRandom, 77, 0.3);
  const auto b = run_experiment(depolarizing(2, 0.5), 3, 0.9, 5, Generation::ProductRandom, 77, 0.3);
  CHECK(a.per_codebook == b.per_codebook);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK_THROWS_AS(run_experiment(id, 9, 1.0, 1, Generation::EntangledRandom, 1, 0.0), ResourceExceeded);
}

TEST_CASE("slope estimate") {
  std::vector<SimResult> rs;
  for (int n = 1; n <= 4; ++n) {
    SimResult r;
    r.n = n;
    r.p_succ_hat = 1.0;
    rs.push_back(r);
  }
  CHECK(slope_estimate(rs) == doctest::Approx(0.0));
  for (auto& r : rs) r.p_succ_hat = 0.8 * std::exp2(-0.7 * r.n);
  CHECK(slope_estimate(rs) == doctest::Approx(0.7));
  rs.resize(2);
  CHECK_THROWS_AS(slope_estimate(rs), DomainError);

  // Orthogonal-basis codebooks at R = 2 saturate the identity-channel bound: slope R - 1 = 1.
  std::vector<SimResult> sat;
  for (int n = 1; n <= 4; ++n) sat.push_back(run_experiment(identity_channel(2), n, 2.0, 1, Generation::Orthogonal, 1, 0.0));
  CHECK(slope_estimate(sat) == doctest::Approx(1.0));
}

TEST_CASE("csv and json rows") {
  const auto r = run_experiment(identity_channel(2), 2, 1.5, 2, Generation::EntangledRandom, 3, 0.5);
  CHECK(sim_csv_header() == "n,R_nominal,R_effective,p_succ_max,p_succ_mean,stderr,envelope,pass");
  const std::string row = to_csv_row(r);
  CHECK(std::count(row.begin(), row.end(), ',') == 7);
  const Json j = to_json(r);
  CHECK(j.at("n") == 2);
  CHECK(j.at("per_codebook").size() == 2);
}
