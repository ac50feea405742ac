#include "strongconv/random.hpp"

#include "strongconv/errors.hpp"

#include <cmath>

namespace strongconv {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  }
  return g;
}

}  // namespace

Matrix haar_unitary(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cplx rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

Vector haar_vector(int dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

std::vector<double> random_simplex(int n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

DensityMatrix random_state(int dim, Rng& rng) {
  return random_state_of_rank(dim, dim, rng);
}

DensityMatrix random_state_of_rank(int dim, int rank, Rng& rng) {
  const auto eig = random_simplex(rank, rng);
  const Matrix u = haar_unitary(dim, rng);
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < rank; ++i) m += eig[static_cast<std::size_t>(i)] * u.col(i) * u.col(i).adjoint();
  m /= m.trace().real();
  return DensityMatrix(hermitize(m));
}

Matrix random_psd(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  return hermitize(g * g.adjoint());
}

Matrix random_hermitian(int dim, Rng& rng) {
  return hermitize(ginibre(dim, dim, rng));
}

Ensemble random_ensemble(int size, int dim, Rng& rng) {
  auto probs = random_simplex(size, rng);
  std::vector<DensityMatrix> states;
  states.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) states.push_back(random_state(dim, rng));
  double total = 0.0;
  for (double p : probs) total += p;
  probs.front() += 1.0 - total;
  return Ensemble(std::move(probs), std::move(states));
}

QuantumChannel random_channel(int dim_in, int dim_out, int kraus_count, Rng& rng) {
  const int rows = dim_out * kraus_count;
  if (rows < dim_in) throw DomainError("random_channel: dim_out * kraus_count must be at least dim_in");
  Eigen::HouseholderQR<Matrix> qr(ginibre(rows, dim_in, rng));
  const Matrix v = qr.householderQ() * Matrix::Identity(rows, dim_in);
  std::vector<Matrix> kraus;
  for (int k = 0; k < kraus_count; ++k) kraus.push_back(v.block(k * dim_out, 0, dim_out, dim_in));
  return QuantumChannel(dim_in, dim_out, std::move(kraus));
}

}  // namespace strongconv
