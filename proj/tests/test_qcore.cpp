#include "oracles.hpp"

#include "strongconv/channels.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/parallel.hpp"
#include "strongconv/qcore.hpp"
#include "strongconv/random.hpp"
#include "strongconv/serialize.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace strongconv;

namespace {

Matrix diag(std::initializer_list<double> values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<cplx>().asDiagonal();
}

}  // namespace

TEST_CASE("density matrix invariants are enforced") {
  CHECK_NOTHROW(DensityMatrix(diag({0.75, 0.25})));
  CHECK_THROWS_AS(DensityMatrix(diag({0.8, 0.3})), InvariantViolation);
  CHECK_THROWS_AS(DensityMatrix(diag({1.2, -0.2})), InvariantViolation);
  Matrix nonherm = diag({0.5, 0.5});
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, InvariantViolation);
  CHECK_THROWS_AS(DensityMatrix(Matrix::Zero(2, 3)), InvariantViolation);
  CHECK_THROWS_AS(DensityMatrix::basis(2, 2), DomainError);

  const auto mm = DensityMatrix::maximally_mixed(3);
  CHECK(max_abs(mm.matrix() - Matrix::Identity(3, 3) / 3.0) < 1e-15);
  Vector psi(2);
  psi << 3.0, cplx(0.0, 4.0);
  const auto pure = DensityMatrix::pure(psi);
  CHECK(pure.matrix().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("channel completeness is enforced") {
  CHECK_THROWS_AS(QuantumChannel(2, 2, {0.5 * Matrix::Identity(2, 2)}), InvariantViolation);
  CHECK_THROWS_AS(QuantumChannel(2, 2, {}), InvariantViolation);
  CHECK_THROWS_AS(QuantumChannel(2, 3, {Matrix::Identity(2, 2)}), InvariantViolation);
}

TEST_CASE("apply_channel examples") {
  Rng rng(11);
  const auto rho = random_state(3, rng);
  CHECK(max_abs(apply_channel(identity_channel(3), rho).matrix() - rho.matrix()) < 1e-14);

  const auto out0 = apply_channel(depolarizing(2, 0.0), DensityMatrix::pure(haar_vector(2, rng)));
  CHECK(max_abs(out0.matrix() - Matrix::Identity(2, 2) / 2.0) < 1e-12);

  const auto half = apply_channel(depolarizing(2, 0.5), DensityMatrix::basis(2, 0));
  CHECK(max_abs(half.matrix() - diag({0.75, 0.25})) < 1e-12);

  CHECK_THROWS_AS(apply_channel(identity_channel(2), rho), DimensionMismatch);
}

TEST_CASE("apply_channel preserves state invariants on random channels") {
  Rng rng(12);
  for (int d = 2; d <= 4; ++d) {
    for (int s = 0; s < 100; ++s) {
      const int nk = std::uniform_int_distribution<int>(1, 4)(rng);
      const QuantumChannel ch = random_channel(d, d, nk, rng);
      const auto rho = random_state(d, rng);
      CHECK_NOTHROW(apply_channel(ch, rho));
    }
  }
}

TEST_CASE("tensor_power examples and budget") {
  const auto id3 = tensor_power(identity_channel(2), 3);
  CHECK(id3.dim_in() == 8);
  CHECK(id3.kraus().size() == 1);
  CHECK(max_abs(id3.kraus().front() - Matrix::Identity(8, 8)) < 1e-15);

  const auto dep = depolarizing(2, 0.3);
  const auto dep2 = tensor_power(dep, 2);
  CHECK(dep2.dim_in() == 4);
  CHECK(dep2.dim_out() == 4);
  CHECK(dep2.kraus().size() == 16);
  CHECK(dep2.label() == "depolarizing");

  ResourceBudget tight;
  tight.max_dim = 8;
  CHECK_THROWS_AS(tensor_power(dep, 4, tight), ResourceExceeded);
  CHECK_THROWS_AS(tensor_power(dep, 0), DomainError);

  Rng rng(13);
  const Matrix x = random_state(8, rng).matrix();
  const auto dep3 = tensor_power(dep, 3);
  CHECK(max_abs(apply_kraus(dep3.kraus(), x) - apply_tensor_power(dep, 3, x)) < 1e-13);
}

TEST_CASE("trace of tensor product factorizes") {
  Rng rng(14);
  for (int s = 0; s < 20; ++s) {
    const Matrix a = random_psd(2, rng);
    const Matrix b = random_psd(3, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-10);
  }
}

TEST_CASE("trace_pairing_bounds examples") {
  auto b = trace_pairing_bounds(diag({1, 0}), diag({1, 0}));
  CHECK(b.lower == doctest::Approx(0.0));
  CHECK(b.upper == doctest::Approx(1.0));

  b = trace_pairing_bounds(Matrix::Identity(3, 3) / 3.0, Matrix::Identity(3, 3) / 3.0);
  CHECK(b.lower == doctest::Approx(1.0 / 3.0));
  CHECK(b.upper == doctest::Approx(1.0 / 3.0));

  b = trace_pairing_bounds(diag({0.7, 0.3}), diag({0.9, 0.1}));
  CHECK(b.upper == doctest::Approx(0.66));
  CHECK(b.lower == doctest::Approx(0.34));

  CHECK_THROWS_AS(trace_pairing_bounds(diag({1, -1}), diag({1, 0})), InvariantViolation);
}

TEST_CASE("trace pairing brackets random unitary conjugations") {
  Rng rng(15);
  for (int d = 2; d <= 4; ++d) {
    for (int s = 0; s < 20; ++s) {
      const Matrix a = random_psd(d, rng);
      const Matrix b = random_psd(d, rng);
      const auto bounds = trace_pairing_bounds(a, b);
      for (int u = 0; u < 5; ++u) {
        const Matrix w = haar_unitary(d, rng);
        const double v = (w * a * w.adjoint() * b).trace().real();
        CHECK(v - bounds.lower >= -1e-9);
        CHECK(bounds.upper - v >= -1e-9);
      }
    }
  }
}

TEST_CASE("pseudo_power examples and round trips") {
  CHECK(max_abs(pseudo_power(Matrix::Identity(3, 3), 0.7) - Matrix::Identity(3, 3)) < 1e-14);
  CHECK(max_abs(pseudo_power(diag({4, 0}), -1.0) - diag({0.25, 0})) < 1e-14);
  CHECK(max_abs(pseudo_power(diag({0.25, 0.75}), 2.0) - diag({1.0 / 16, 9.0 / 16})) < 1e-14);

  Rng rng(16);
  for (double p : {2.0, 0.5, -1.0}) {
    for (int s = 0; s < 10; ++s) {
      const Matrix m = random_state_of_rank(4, 2, rng).matrix();
      CHECK(max_abs(pseudo_power(m, 1.0) - m) < 1e-12);
      CHECK(max_abs(pseudo_power(pseudo_power(m, p), 1.0 / p) - m) < 1e-10);
    }
  }
}

TEST_CASE("pseudo_power agrees with the Schur-based oracle on full-rank input") {
  Rng rng(17);
  for (int s = 0; s < 10; ++s) {
    const Matrix m = random_state(3, rng).matrix();
    for (double p : {-0.5, 0.3, 2.5}) CHECK(max_abs(pseudo_power(m, p) - oracle::mpow(m, p)) < 1e-9);
  }
}

TEST_CASE("frechet derivative matches finite differences") {
  Rng rng(18);
  const Matrix a = random_state(3, rng).matrix();
  const Matrix dir = random_hermitian(3, rng);
  const auto f = [](double x) { return std::pow(x, 2.5); };
  const auto df = [](double x) { return 2.5 * std::pow(x, 1.5); };
  const Matrix analytic = frechet_derivative(eigh(a), dir, f, df);
  const double h = 1e-6;
  const Matrix numeric = (oracle::mpow(a + h * dir, 2.5) - oracle::mpow(a - h * dir, 2.5)) / (2 * h);
  CHECK(max_abs(analytic - numeric) < 1e-6);
}

TEST_CASE("povm and ensemble validation") {
  CHECK_NOTHROW(Povm({diag({1, 0}), diag({0, 1})}));
  CHECK_THROWS_AS(Povm({diag({1, 0}), diag({0, 0.5})}), InvariantViolation);
  CHECK_THROWS_AS(Povm({diag({1.5, 0}), diag({-0.5, 1})}), InvariantViolation);

  const auto s0 = DensityMatrix::basis(2, 0);
  const auto s1 = DensityMatrix::basis(2, 1);
  CHECK_THROWS_AS(Ensemble({0.6, 0.6}, {s0, s1}), InvariantViolation);
  CHECK_THROWS_AS(Ensemble({1.2, -0.2}, {s0, s1}), InvariantViolation);
  CHECK_THROWS_AS(Ensemble({0.5, 0.5}, {s0, DensityMatrix::basis(3, 0)}), DimensionMismatch);
  const auto avg = Ensemble::uniform({s0, s1}).average();
  CHECK(max_abs(avg.matrix() - Matrix::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("finite group closure is checked") {
  CHECK(weyl_heisenberg_group(3).closed_under_product());
  const Matrix x = weyl_operator(3, 1, 0);
  CHECK_THROWS_AS(GroupRep::finite({{Matrix::Identity(3, 3), Matrix::Identity(3, 3)}, {x, x}}), InvariantViolation);
  CHECK_THROWS_AS(GroupRep::finite({{2.0 * Matrix::Identity(2, 2), Matrix::Identity(2, 2)}}), InvariantViolation);
}

TEST_CASE("choi matrix round trip") {
  Rng rng(19);
  const QuantumChannel ch = random_channel(2, 3, 3, rng);
  const Matrix choi = choi_matrix(ch);
  CHECK(min_eigenvalue(choi) > -1e-12);
  const QuantumChannel back(2, 3, kraus_from_choi(choi, 2, 3));
  const Matrix x = random_state(2, rng).matrix();
  CHECK(max_abs(apply_kraus(ch.kraus(), x) - apply_kraus(back.kraus(), x)) < 1e-12);
}

TEST_CASE("random sampling is reproducible from the seed") {
  Rng a(42);
  Rng b(42);
  CHECK(max_abs(haar_unitary(3, a) - haar_unitary(3, b)) == 0.0);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  Rng c(43);
  CHECK(unitarity_defect(haar_unitary(4, c)) < 1e-12);
}

TEST_CASE("parallel_map keeps index order and propagates exceptions") {
  const auto squares = parallel_map<int>(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(parallel_map<int>(10,
                                    [](std::size_t i) {
                                      if (i == 7) throw DomainError("boom");
                                      return 0;
                                    }),
                  DomainError);
}

TEST_CASE("json serialization round trips and rejects malformed input") {
  Rng rng(20);
  const auto rho = random_state(3, rng);
  const auto back = state_from_json(Json::parse(state_to_json(rho).dump()));
  CHECK(max_abs(back.matrix() - rho.matrix()) < 1e-15);

  const auto dep = depolarizing(2, 0.4);
  const auto ch = channel_from_json(Json::parse(channel_to_json(dep).dump()));
  CHECK(ch.kraus().size() == dep.kraus().size());

  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"im": [[0]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"re": [[1, 0], [0]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"re": [["a"]]})")), ParseError);
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"re": [[0.5, 0], [0, 0.6]]})")), InvariantViolation);
  CHECK_THROWS_AS(channel_from_json(Json::parse(R"({"dim_in": 2})")), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/state.json"), ParseError);
}
