#include "strongconv/qcore.hpp"

#include "strongconv/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace strongconv {

namespace {

std::string dims(int a, int b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

}  // namespace

// ---------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvariantViolation("density matrix must be square and non-empty");
  }
  const double herm = max_abs(m - m.adjoint());
  if (herm > tol) {
    throw InvariantViolation("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  m_ = hermitize(m);
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw InvariantViolation("density matrix trace is " + std::to_string(tr));
  }
  const double lmin = eigh(m_).values.minCoeff();
  if (lmin < -tol) {
    throw InvariantViolation("density matrix has negative eigenvalue " + std::to_string(lmin));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (psi.size() == 0 || norm == 0.0) throw InvariantViolation("pure state vector is zero");
  const Vector v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::basis(int dim, int k) {
  if (k < 0 || k >= dim) throw DomainError("basis index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityMatrix(m);
}

// ---------------------------------------------------------------- QuantumChannel

QuantumChannel::QuantumChannel(int dim_in, int dim_out, std::vector<Matrix> kraus, std::string label)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)), label_(std::move(label)) {
  if (dim_in < 1 || dim_out < 1) throw InvariantViolation("channel dimensions must be positive");
  if (kraus_.empty()) throw InvariantViolation("channel needs at least one Kraus operator");
  Matrix completeness = Matrix::Zero(dim_in, dim_in);
  for (const auto& k : kraus_) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw InvariantViolation("Kraus operator has shape " + std::to_string(k.rows()) + "x" +
                               std::to_string(k.cols()) + ", expected " + std::to_string(dim_out) +
                               "x" + std::to_string(dim_in));
    }
    completeness += k.adjoint() * k;
  }
  const double defect = max_abs(completeness - Matrix::Identity(dim_in, dim_in));
  if (defect > kInvariantTol) {
    throw InvariantViolation("Kraus family is not trace preserving (defect " + std::to_string(defect) +
                             ")");
  }
}

// ---------------------------------------------------------------- Povm

Povm::Povm(std::vector<Matrix> elements, double tol) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvariantViolation("POVM needs at least one element");
  dim_ = static_cast<int>(elements_.front().rows());
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (auto& e : elements_) {
    if (e.rows() != dim_ || e.cols() != dim_) throw InvariantViolation("POVM elements differ in shape");
    require_psd(e, tol, "POVM element");
    e = hermitize(e);
    sum += e;
  }
  const double defect = max_abs(sum - Matrix::Identity(dim_, dim_));
  if (defect > tol) {
    throw InvariantViolation("POVM elements do not sum to identity (defect " + std::to_string(defect) +
                             ")");
  }
}

// ---------------------------------------------------------------- Ensemble

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty() || probs_.size() != states_.size()) {
    throw InvariantViolation("ensemble needs matching, non-empty probability and state lists");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw InvariantViolation("ensemble probability is negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvariantViolation("ensemble probabilities sum to " + std::to_string(total));
  }
  const int d = states_.front().dim();
  for (const auto& s : states_) {
    if (s.dim() != d) throw DimensionMismatch("ensemble states differ in dimension: " + dims(s.dim(), d));
  }
}

Ensemble Ensemble::uniform(std::vector<DensityMatrix> states) {
  const double p = 1.0 / static_cast<double>(states.size());
  std::vector<double> probs(states.size(), p);
  // Absorb the rounding of 1/N into the first entry so the sum is exact enough.
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (!probs.empty()) probs.front() += 1.0 - total;
  return Ensemble(std::move(probs), std::move(states));
}

DensityMatrix Ensemble::average() const {
  Matrix avg = Matrix::Zero(dim(), dim());
  for (std::size_t x = 0; x < size(); ++x) avg += probs_[x] * states_[x].matrix();
  return DensityMatrix(avg);
}

// ---------------------------------------------------------------- GroupRep

namespace {

// Index of the element equal to `m` up to a global phase, or -1.
int find_up_to_phase(const std::vector<UnitaryPair>& elems, const UnitaryPair& m) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const cplx overlap_in = (elems[i].in.adjoint() * m.in).trace();
    const cplx overlap_out = (elems[i].out.adjoint() * m.out).trace();
    const double din = static_cast<double>(m.in.rows());
    const double dout = static_cast<double>(m.out.rows());
    if (std::abs(std::abs(overlap_in) - din) > 1e-8 || std::abs(std::abs(overlap_out) - dout) > 1e-8) {
      continue;
    }
    const cplx ph_in = overlap_in / std::abs(overlap_in);
    const cplx ph_out = overlap_out / std::abs(overlap_out);
    if (max_abs(elems[i].in * ph_in - m.in) < 1e-8 && max_abs(elems[i].out * ph_out - m.out) < 1e-8) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

GroupRep GroupRep::finite(std::vector<UnitaryPair> elements) {
  if (elements.empty()) throw InvariantViolation("group needs at least one element");
  GroupRep g;
  g.dim_in_ = static_cast<int>(elements.front().in.rows());
  g.dim_out_ = static_cast<int>(elements.front().out.rows());
  for (const auto& e : elements) {
    if (e.in.rows() != g.dim_in_ || e.out.rows() != g.dim_out_) {
      throw InvariantViolation("group elements differ in dimension");
    }
    if (unitarity_defect(e.in) > kInvariantTol || unitarity_defect(e.out) > kInvariantTol) {
      throw InvariantViolation("group element is not unitary");
    }
  }
  if (elements.size() <= 1024) {
    for (const auto& a : elements) {
      if (find_up_to_phase(elements, {a.in.adjoint(), a.out.adjoint()}) < 0) {
        throw InvariantViolation("finite group is not closed under inverse");
      }
      for (const auto& b : elements) {
        if (find_up_to_phase(elements, {a.in * b.in, a.out * b.out}) < 0) {
          throw InvariantViolation("finite group is not closed under product");
        }
      }
    }
    g.closed_ = true;
  }
  g.elements_ = std::move(elements);
  g.name_ = "finite";
  return g;
}

GroupRep GroupRep::sampled(int dim_in, int dim_out, Sampler sampler, std::string name) {
  if (!sampler) throw InvariantViolation("sampled group needs a sampler");
  GroupRep g;
  g.dim_in_ = dim_in;
  g.dim_out_ = dim_out;
  g.sampler_ = std::move(sampler);
  g.name_ = std::move(name);
  return g;
}

UnitaryPair GroupRep::sample(std::mt19937_64& rng) const {
  if (sampler_) return sampler_(rng);
  std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
  return elements_[pick(rng)];
}

GroupRep GroupRep::with_name(std::string name) const {
  GroupRep g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------- operations

Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& x) {
  Matrix out = Matrix::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out.noalias() += k * x * k.adjoint();
  return out;
}

Matrix apply_adjoint(const std::vector<Matrix>& kraus, const Matrix& x) {
  Matrix out = Matrix::Zero(kraus.front().cols(), kraus.front().cols());
  for (const auto& k : kraus) out.noalias() += k.adjoint() * x * k;
  return out;
}

DensityMatrix apply_channel(const QuantumChannel& channel, const DensityMatrix& state) {
  if (state.dim() != channel.dim_in()) {
    throw DimensionMismatch("apply_channel: state dimension " + dims(state.dim(), channel.dim_in()));
  }
  return DensityMatrix(apply_kraus(channel.kraus(), state.matrix()));
}

long long checked_power(long long base, int n, long long limit) {
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > limit / base) return -1;
    v *= base;
  }
  return v <= limit ? v : -1;
}

QuantumChannel tensor_power(const QuantumChannel& channel, int n, const ResourceBudget& budget) {
  if (n < 1) throw DomainError("tensor_power: n must be at least 1");
  const long long din = checked_power(channel.dim_in(), n, budget.max_dim);
  const long long dout = checked_power(channel.dim_out(), n, budget.max_dim);
  if (din < 0 || dout < 0) {
    throw ResourceExceeded("tensor_power: dimension " + std::to_string(channel.dim_in()) + "^" +
                           std::to_string(n) + " exceeds budget " + std::to_string(budget.max_dim));
  }
  const auto limit = static_cast<long long>(budget.max_kraus_entries);
  const long long count = checked_power(static_cast<long long>(channel.kraus().size()), n, limit);
  if (count < 0 || count > limit / (din * dout)) {
    throw ResourceExceeded("tensor_power: Kraus family of " + std::to_string(channel.kraus().size()) +
                           "^" + std::to_string(n) + " operators exceeds the entry budget");
  }
  std::vector<Matrix> family = channel.kraus();
  for (int i = 1; i < n; ++i) {
    std::vector<Matrix> next;
    next.reserve(family.size() * channel.kraus().size());
    for (const auto& a : family) {
      for (const auto& b : channel.kraus()) next.push_back(kron(a, b));
    }
    family = std::move(next);
  }
  return QuantumChannel(static_cast<int>(din), static_cast<int>(dout), std::move(family), channel.label());
}

Matrix apply_tensor_power(const QuantumChannel& channel, int n, const Matrix& x) {
  if (n < 1) throw DomainError("apply_tensor_power: n must be at least 1");
  long long expected = 1;
  for (int i = 0; i < n; ++i) expected *= channel.dim_in();
  if (x.rows() != expected || x.cols() != expected) {
    throw DimensionMismatch("apply_tensor_power: operator dimension " +
                            dims(static_cast<int>(x.rows()), static_cast<int>(expected)));
  }
  // Sites 0..site-1 already carry the output dimension.
  Matrix cur = x;
  long long left = 1;
  long long right = expected / channel.dim_in();
  for (int site = 0; site < n; ++site) {
    const Matrix id_left = Matrix::Identity(left, left);
    const Matrix id_right = Matrix::Identity(right, right);
    Matrix next = Matrix::Zero(left * channel.dim_out() * right, left * channel.dim_out() * right);
    for (const auto& k : channel.kraus()) {
      const Matrix lifted = kron(kron(id_left, k), id_right);
      next.noalias() += lifted * cur * lifted.adjoint();
    }
    cur = std::move(next);
    left *= channel.dim_out();
    right /= channel.dim_in();
  }
  return cur;
}

Matrix choi_matrix(const QuantumChannel& channel) {
  const int din = channel.dim_in();
  const int dout = channel.dim_out();
  Matrix choi = Matrix::Zero(din * dout, din * dout);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      Matrix eij = Matrix::Zero(din, din);
      eij(i, j) = 1.0;
      choi.block(i * dout, j * dout, dout, dout) = apply_kraus(channel.kraus(), eij);
    }
  }
  return choi;
}

std::vector<Matrix> kraus_from_choi(const Matrix& choi, int dim_in, int dim_out) {
  if (choi.rows() != dim_in * dim_out || choi.cols() != dim_in * dim_out) {
    throw DimensionMismatch("kraus_from_choi: Choi matrix has wrong size");
  }
  require_psd(choi, 1e-9, "Choi matrix");
  const Spectrum s = eigh(choi);
  std::vector<Matrix> kraus;
  for (int a = 0; a < s.dim(); ++a) {
    if (!s.in_support(a)) continue;
    const Vector v = s.vectors.col(a) * std::sqrt(s.values(a));
    // v = sum_i |i> (x) K|i>, so column i of K is the i-th block of v.
    Matrix k(dim_out, dim_in);
    for (int i = 0; i < dim_in; ++i) k.col(i) = v.segment(i * dim_out, dim_out);
    kraus.push_back(std::move(k));
  }
  return kraus;
}

}  // namespace strongconv
