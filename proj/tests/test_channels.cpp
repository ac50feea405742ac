#include "strongconv/channels.hpp"
#include "strongconv/entropy.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/random.hpp"

#include <doctest.h>

#include <string>

using namespace strongconv;

namespace {

Matrix completeness_defect(const QuantumChannel& ch) {
  Matrix s = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& k : ch.kraus()) s += k.adjoint() * k;
  return s - Matrix::Identity(ch.dim_in(), ch.dim_in());
}

}  // namespace

TEST_CASE("depolarizing examples") {
  Rng rng(1);
  const auto rho = random_state(3, rng);
  CHECK(max_abs(apply_channel(depolarizing(3, 1.0), rho).matrix() - rho.matrix()) < 1e-12);
  CHECK(max_abs(apply_channel(depolarizing(3, 0.0), rho).matrix() - Matrix::Identity(3, 3) / 3.0) < 1e-12);
  const Matrix out = apply_channel(depolarizing(2, 0.5), DensityMatrix::basis(2, 0)).matrix();
  CHECK(out(0, 0).real() == doctest::Approx(0.75));
  CHECK(out(1, 1).real() == doctest::Approx(0.25));
}

TEST_CASE("depolarizing matches its defining formula across the CP range") {
  Rng rng(2);
  for (int d : {2, 3}) {
    const double lower = -1.0 / (d * d - 1.0);
    for (double r : {lower, lower / 2, 0.2, 0.9}) {
      const auto ch = depolarizing(d, r);
      CHECK(max_abs(completeness_defect(ch)) < 1e-10);
      const auto rho = random_state(d, rng);
      const Matrix expect = r * rho.matrix() + (1.0 - r) * Matrix::Identity(d, d) / static_cast<double>(d);
      CHECK(max_abs(apply_channel(ch, rho).matrix() - expect) < 1e-12);
    }
  }
}

TEST_CASE("depolarizing rejects parameters outside the CP range with the interval") {
  try {
    depolarizing(2, -0.5);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("-0.3333333333") != std::string::npos);
  }
  CHECK_THROWS_AS(depolarizing(2, 1.01), DomainError);
  CHECK_THROWS_AS(depolarizing(1, 0.5), DomainError);
}

TEST_CASE("pauli diagonal examples") {
  Rng rng(3);
  const auto rho = random_state(2, rng);
  CHECK(max_abs(apply_channel(pauli_diagonal({1, 0, 0, 0}), rho).matrix() - rho.matrix()) < 1e-14);

  const double p = 0.36;
  const auto pd = pauli_diagonal({1 - 3 * p / 4, p / 4, p / 4, p / 4});
  const auto dep = depolarizing(2, 1 - p);
  for (int s = 0; s < 20; ++s) {
    const auto st = random_state(2, rng);
    CHECK(max_abs(apply_channel(pd, st).matrix() - apply_channel(dep, st).matrix()) < 1e-12);
  }

  Vector plus(2);
  plus << 1.0, 1.0;
  const auto ps = DensityMatrix::pure(plus);
  CHECK(max_abs(apply_channel(pauli_diagonal({0.5, 0.5, 0, 0}), ps).matrix() - ps.matrix()) < 1e-14);

  CHECK_THROWS_AS(pauli_diagonal({0.5, 0.5, 0.5, 0}), DomainError);
  CHECK_THROWS_AS(pauli_diagonal({1.5, -0.5, 0, 0}), DomainError);
}

TEST_CASE("pauli diagonal channels are unital") {
  Rng rng(4);
  for (int s = 0; s < 50; ++s) {
    const auto w = random_simplex(4, rng);
    const auto ch = pauli_diagonal({w[0], w[1], w[2], w[3]});
    CHECK(max_abs(apply_kraus(ch.kraus(), Matrix::Identity(2, 2) / 2.0) - Matrix::Identity(2, 2) / 2.0) <= 1e-12);
  }
}

TEST_CASE("werner-holevo examples") {
  const auto wh2 = werner_holevo(2);
  CHECK(max_abs(apply_channel(wh2, DensityMatrix::basis(2, 0)).matrix() - DensityMatrix::basis(2, 1).matrix()) < 1e-14);
  Rng rng(5);
  for (int d = 2; d <= 4; ++d) {
    const auto wh = werner_holevo(d);
    CHECK(max_abs(completeness_defect(wh)) < 1e-10);
    CHECK(max_abs(apply_kraus(wh.kraus(), Matrix::Identity(d, d) / d) - Matrix::Identity(d, d) / d) < 1e-14);
    for (int s = 0; s < 5; ++s) {
      const auto rho = random_state(d, rng);
      const Matrix expect = (Matrix::Identity(d, d) - rho.matrix().transpose()) / (d - 1.0);
      CHECK(max_abs(apply_channel(wh, rho).matrix() - expect) < 1e-12);
      const auto spec = eigh(apply_channel(wh, DensityMatrix::pure(haar_vector(d, rng))).matrix());
      CHECK(std::abs(spec.values(0)) < 1e-12);
      for (int i = 1; i < d; ++i) CHECK(spec.values(i) == doctest::Approx(1.0 / (d - 1)));
    }
  }
}

TEST_CASE("covariance examples") {
  const auto dep = depolarizing(2, 0.5);
  CHECK(check_covariance(dep, weyl_heisenberg_group(2), 10, 1).max_residual <= 1e-9);
  CHECK(check_covariance(identity_channel(3), haar_pairs(3), 10, 2).max_residual <= 1e-12);
  CHECK(check_covariance(werner_holevo(3), conjugate_haar_pairs(3), 20, 3).max_residual <= 1e-9);
  CHECK(check_covariance(depolarizing(3, 0.2), haar_pairs(3), 100, 4).max_residual <= 1e-9);
  // Werner-Holevo is not covariant under (U, U).
  CHECK_FALSE(check_covariance(werner_holevo(3), haar_pairs(3), 5, 5).passed);
  CHECK_THROWS_AS(check_covariance(dep, weyl_heisenberg_group(3), 5, 6), DimensionMismatch);
}

TEST_CASE("irreducibility examples") {
  CHECK(check_irreducibility(weyl_heisenberg_group(2), RepSide::Output, 10, 1).passed);
  CHECK(check_irreducibility(weyl_heisenberg_group(3), RepSide::Output, 10, 2).passed);
  CHECK(check_irreducibility(conjugate_haar_pairs(3), RepSide::Output, 10, 3).passed);
  CHECK(check_irreducibility(conjugate_haar_pairs(3), RepSide::Input, 10, 3).passed);
  for (int d = 2; d <= 4; ++d) CHECK_FALSE(check_irreducibility(trivial_group(d), RepSide::Output, 10, 4).passed);
  // The diagonal subgroup {Z^b} of the Weyl-Heisenberg group is reducible.
  std::vector<UnitaryPair> zs;
  for (int b = 0; b < 3; ++b) zs.push_back({weyl_operator(3, 0, b), weyl_operator(3, 0, b)});
  CHECK_FALSE(check_irreducibility(GroupRep::finite(zs), RepSide::Output, 10, 5).passed);
}

TEST_CASE("certificates for named channels") {
  CHECK(certify_named_channel(depolarizing(2, 0.5)).valid());
  CHECK(certify_named_channel(depolarizing(3, -0.1)).valid());
  CHECK(certify_named_channel(werner_holevo(3)).valid());
  CHECK(certify_named_channel(identity_channel(2)).valid());
  CHECK(certify_named_channel(pauli_diagonal({0.7, 0.1, 0.1, 0.1})).valid());
  // An asymmetric Pauli channel is not Weyl-Heisenberg covariant as a whole, but each Pauli commutes
  // with the channel up to phase, so it still certifies.
  CHECK(certify_named_channel(pauli_diagonal({0.6, 0.3, 0.1, 0.0})).valid());
  Rng rng(7);
  CHECK_THROWS_AS(certify_named_channel(random_channel(2, 2, 2, rng)), NotCertified);
  const auto cert = certify_covariance(depolarizing(2, 0.5), trivial_group(2), 5, 1);
  CHECK(cert.covariant);
  CHECK_FALSE(cert.irreducible);
  CHECK_FALSE(cert.valid());
  CHECK(CovarianceCertificate::acknowledged_override().valid());
}

TEST_CASE("additivity ranges") {
  CHECK(additivity_alpha_max(depolarizing(2, 0.5)) == 3.0);
  CHECK(additivity_alpha_max(pauli_diagonal({1, 0, 0, 0})) == 3.0);
  CHECK(additivity_alpha_max(werner_holevo(3)) == 2.0);
  Rng rng(8);
  CHECK(additivity_alpha_max(random_channel(2, 2, 2, rng)) == 0.0);
}
