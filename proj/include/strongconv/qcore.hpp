#pragma once

#include "strongconv/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace strongconv {

/// Tolerance for all state, channel and POVM invariants.
inline constexpr double kInvariantTol = 1e-10;

/// Limits on the size of explicitly materialized objects.
struct ResourceBudget {
  /// Largest Hilbert-space dimension of any n-fold system.
  int max_dim = 256;
  /// Largest number of complex entries in an explicit Kraus family.
  std::size_t max_kraus_entries = std::size_t{1} << 24;
};

/// Hermitian PSD unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates the invariants within `tol`; the stored matrix is hermitized.
  explicit DensityMatrix(const Matrix& m, double tol = kInvariantTol);

  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for the normalized vector.
  static DensityMatrix pure(const Vector& psi);
  /// |k><k| in dimension `dim`.
  static DensityMatrix basis(int dim, int k);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Completely positive trace-preserving map in Kraus form.
class QuantumChannel {
 public:
  /// Validates sum_i K_i^dagger K_i = I within kInvariantTol entrywise.
  QuantumChannel(int dim_in, int dim_out, std::vector<Matrix> kraus, std::string label = "custom");

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  /// Constructor family the channel came from ("depolarizing", "pauli", ...).
  const std::string& label() const { return label_; }

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Matrix> kraus_;
  std::string label_;
};

/// PSD operators summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Matrix> elements, double tol = kInvariantTol);

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }

 private:
  int dim_;
  std::vector<Matrix> elements_;
};

/// Probability vector paired with states of a common dimension; the cq-state
/// sum_x p_x |x><x| (x) rho_x is never materialized.
class Ensemble {
 public:
  Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states);

  static Ensemble uniform(std::vector<DensityMatrix> states);

  std::size_t size() const { return probs_.size(); }
  int dim() const { return states_.front().dim(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  /// sum_x p_x rho_x
  DensityMatrix average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

struct UnitaryPair {
  Matrix in;
  Matrix out;
};

/// Pair of unitary representations of a group on the input and output spaces.
/// Either a finite element list (closure checked for groups up to 1024
/// elements) or an i.i.d. sampler for continuous groups.
class GroupRep {
 public:
  using Sampler = std::function<UnitaryPair(std::mt19937_64&)>;

  static GroupRep finite(std::vector<UnitaryPair> elements);
  static GroupRep sampled(int dim_in, int dim_out, Sampler sampler, std::string name = "sampled");

  bool is_finite() const { return !sampler_; }
  /// True when closure under product and inverse (up to phase) was verified.
  bool closed_under_product() const { return closed_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<UnitaryPair>& elements() const { return elements_; }
  UnitaryPair sample(std::mt19937_64& rng) const;
  const std::string& name() const { return name_; }

  GroupRep with_name(std::string name) const;

 private:
  GroupRep() = default;
  int dim_in_ = 0;
  int dim_out_ = 0;
  std::vector<UnitaryPair> elements_;
  Sampler sampler_;
  bool closed_ = false;
  std::string name_;
};

/// sum_i K_i rho K_i^dagger.
DensityMatrix apply_channel(const QuantumChannel& channel, const DensityMatrix& state);

/// Channel action on an arbitrary operator, unchecked.
Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& x);
/// Adjoint (Heisenberg-picture) action sum_i K_i^dagger X K_i.
Matrix apply_adjoint(const std::vector<Matrix>& kraus, const Matrix& x);

/// Explicit Kraus family of channel^{(x) n}: all n-fold products.
/// Throws ResourceExceeded when a dimension exceeds budget.max_dim or the
/// family would hold more than budget.max_kraus_entries entries.
QuantumChannel tensor_power(const QuantumChannel& channel, int n, const ResourceBudget& budget = {});

/// channel^{(x) n} applied to an operator on the n-fold input space, one tensor
/// factor at a time (never materializes the n-fold Kraus family).
Matrix apply_tensor_power(const QuantumChannel& channel, int n, const Matrix& x);

/// Choi matrix sum_{ij} |i><j| (x) Phi(|i><j|), of size dim_in*dim_out.
Matrix choi_matrix(const QuantumChannel& channel);

/// Kraus family from a PSD Choi matrix (input index major) via its eigen-decomposition.
std::vector<Matrix> kraus_from_choi(const Matrix& choi, int dim_in, int dim_out);

/// Integer power with overflow guard; returns -1 when base^n exceeds `limit`.
long long checked_power(long long base, int n, long long limit);

}  // namespace strongconv
