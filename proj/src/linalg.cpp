#include "strongconv/linalg.hpp"

#include "strongconv/errors.hpp"

#include <algorithm>
#include <string>

namespace strongconv {

Matrix hermitize(const Matrix& m) {
  return (m + m.adjoint()) * 0.5;
}

double Spectrum::support_threshold() const {
  return kSupportCutoff * std::max(max_value(), 0.0);
}

int Spectrum::rank() const {
  int r = 0;
  for (int i = 0; i < dim(); ++i) r += in_support(i) ? 1 : 0;
  return r;
}

Spectrum eigh(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success) {
    throw InvariantViolation("eigen-decomposition failed to converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix apply_function(const Spectrum& s, const std::function<double(double)>& f) {
  RealVector fv(s.dim());
  for (int i = 0; i < s.dim(); ++i) fv(i) = f(s.values(i));
  return s.vectors * fv.cast<cplx>().asDiagonal() * s.vectors.adjoint();
}

Matrix apply_on_support(const Spectrum& s, const std::function<double(double)>& f) {
  RealVector fv(s.dim());
  for (int i = 0; i < s.dim(); ++i) fv(i) = s.in_support(i) ? f(s.values(i)) : 0.0;
  return s.vectors * fv.cast<cplx>().asDiagonal() * s.vectors.adjoint();
}

Matrix pseudo_power(const Spectrum& s, double p) {
  return apply_on_support(s, [p](double x) { return std::pow(x, p); });
}

Matrix pseudo_power(const Matrix& m, double p) {
  return pseudo_power(eigh(m), p);
}

Matrix support_projector(const Spectrum& s) {
  return apply_on_support(s, [](double) { return 1.0; });
}

Matrix support_projector(const Matrix& m) {
  return support_projector(eigh(m));
}

Matrix frechet_derivative(const Spectrum& s, const Matrix& direction,
                          const std::function<double(double)>& f,
                          const std::function<double(double)>& df) {
  const int d = s.dim();
  RealVector fv(d);
  for (int i = 0; i < d; ++i) fv(i) = f(s.values(i));
  Matrix e = s.vectors.adjoint() * hermitize(direction) * s.vectors;
  const double scale = std::max(1.0, s.values.cwiseAbs().maxCoeff());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double a = s.values(i);
      const double b = s.values(j);
      double dd;
      if (std::abs(a - b) > 1e-9 * scale) {
        dd = (fv(i) - fv(j)) / (a - b);
      } else {
        dd = df(0.5 * (a + b));
      }
      e(i, j) *= dd;
    }
  }
  return s.vectors * e * s.vectors.adjoint();
}

double max_abs(const Matrix& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return eigh(m).values.minCoeff();
}

void require_psd(const Matrix& m, double tol, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvariantViolation(std::string(what) + ": matrix is not square");
  }
  const double herm = max_abs(m - m.adjoint());
  if (herm > tol) {
    throw InvariantViolation(std::string(what) + ": not Hermitian (defect " +
                             std::to_string(herm) + ")");
  }
  const double lmin = min_eigenvalue(m);
  if (lmin < -tol) {
    throw InvariantViolation(std::string(what) + ": not positive semidefinite (min eigenvalue " +
                             std::to_string(lmin) + ")");
  }
}

TracePairing trace_pairing_bounds(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvariantViolation("trace_pairing_bounds: operands differ in dimension");
  }
  require_psd(a, 1e-10, "trace_pairing_bounds(A)");
  require_psd(b, 1e-10, "trace_pairing_bounds(B)");
  const RealVector la = eigh(a).values;  // ascending
  const RealVector lb = eigh(b).values;
  const Eigen::Index d = la.size();
  TracePairing out;
  for (Eigen::Index j = 0; j < d; ++j) {
    out.upper += la(j) * lb(j);
    out.lower += la(j) * lb(d - 1 - j);
  }
  return out;
}

}  // namespace strongconv
