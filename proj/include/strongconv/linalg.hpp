#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>

namespace strongconv {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues below this fraction of the largest eigenvalue are treated as zero.
inline constexpr double kSupportCutoff = 1e-12;

inline constexpr double kLn2 = 0.69314718055994530942;

/// (M + M^dagger) / 2.
Matrix hermitize(const Matrix& m);

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
/// This is the single spectral primitive; every matrix function goes through it.
struct Spectrum {
  RealVector values;
  Matrix vectors;

  int dim() const { return static_cast<int>(values.size()); }
  double max_value() const { return values.size() ? values.maxCoeff() : 0.0; }
  /// Absolute cutoff below which an eigenvalue is outside the support.
  double support_threshold() const;
  bool in_support(int i) const { return values(i) > support_threshold(); }
  int rank() const;
};

/// Hermitizes, then diagonalizes.
Spectrum eigh(const Matrix& m);

/// U f(Lambda) U^dagger.
Matrix apply_function(const Spectrum& s, const std::function<double(double)>& f);

/// Same, but f is applied only on the support and zero elsewhere.
Matrix apply_on_support(const Spectrum& s, const std::function<double(double)>& f);

/// M^p on the support of a PSD matrix, zero on the kernel.
Matrix pseudo_power(const Matrix& m, double p);
Matrix pseudo_power(const Spectrum& s, double p);

/// Orthogonal projector onto the support of a PSD matrix.
Matrix support_projector(const Matrix& m);
Matrix support_projector(const Spectrum& s);

/// Frechet derivative D f(A)[E] for Hermitian A given its spectrum, via divided differences.
/// `f` and `df` must be finite on every eigenvalue of A.
Matrix frechet_derivative(const Spectrum& s, const Matrix& direction,
                          const std::function<double(double)>& f,
                          const std::function<double(double)>& df);

/// Largest absolute entry.
double max_abs(const Matrix& m);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest deviation of U^dagger U from the identity.
double unitarity_defect(const Matrix& u);

/// Minimum eigenvalue after hermitization.
double min_eigenvalue(const Matrix& m);

struct TracePairing {
  double lower = 0.0;
  double upper = 0.0;
};

/// Rearrangement bounds on tr(U A U^dagger B) over all unitaries U for PSD A, B:
/// lower pairs eigenvalues ascending against descending, upper pairs them in the same order.
/// Throws InvariantViolation for non-PSD or non-Hermitian inputs.
TracePairing trace_pairing_bounds(const Matrix& a, const Matrix& b);

/// Throws InvariantViolation unless m is Hermitian and PSD within `tol`.
void require_psd(const Matrix& m, double tol, const char* what);

}  // namespace strongconv
