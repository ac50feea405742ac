#include "strongconv/channels.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/random.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace strongconv {

QuantumChannel identity_channel(int d) {
  if (d < 1) throw DomainError("identity_channel: dimension must be positive");
  return QuantumChannel(d, d, {Matrix::Identity(d, d)}, "identity");
}

Matrix weyl_operator(int d, int a, int b) {
  const double two_pi = 2.0 * std::numbers::pi;
  Matrix w = Matrix::Zero(d, d);
  // X^a Z^b |j> = omega^{b j} |j + a>
  for (int j = 0; j < d; ++j) {
    const double phase = two_pi * static_cast<double>((b * j) % d) / static_cast<double>(d);
    w((j + a) % d, j) = std::polar(1.0, phase);
  }
  return w;
}

QuantumChannel depolarizing(int d, double r) {
  if (d < 2) throw DomainError("depolarizing: dimension must be at least 2");
  const double lower = -1.0 / (static_cast<double>(d) * d - 1.0);
  if (!(r >= lower - 1e-12 && r <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "depolarizing: r = " << r << " outside the completely positive range [" << lower << ", 1]";
    throw DomainError(msg.str());
  }
  const double dd = static_cast<double>(d) * d;
  std::vector<Matrix> kraus;
  if (r >= 0.0) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const double w = (a == 0 && b == 0) ? r + (1.0 - r) / dd : (1.0 - r) / dd;
        if (w <= 0.0) continue;
        kraus.push_back(std::sqrt(w) * weyl_operator(d, a, b));
      }
    }
  } else {
    // Choi matrix r |Omega><Omega| + (1 - r)/d I (x) I with |Omega> = sum_i |ii>.
    Matrix choi = Matrix::Identity(d * d, d * d) * ((1.0 - r) / d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) choi(i * d + i, j * d + j) += r;
    }
    kraus = kraus_from_choi(choi, d, d);
  }
  return QuantumChannel(d, d, std::move(kraus), "depolarizing");
}

std::array<Matrix, 4> pauli_matrices() {
  Matrix i = Matrix::Identity(2, 2);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  Matrix y = Matrix::Zero(2, 2);
  y(0, 1) = cplx(0.0, -1.0);
  y(1, 0) = cplx(0.0, 1.0);
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return {i, x, y, z};
}

QuantumChannel pauli_diagonal(const std::array<double, 4>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("pauli_diagonal: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw DomainError("pauli_diagonal: weights sum to " + std::to_string(total) + ", expected 1");
  }
  const auto paulis = pauli_matrices();
  std::vector<Matrix> kraus;
  for (int j = 0; j < 4; ++j) {
    if (weights[j] > 0.0) kraus.push_back(std::sqrt(weights[j]) * paulis[j]);
  }
  return QuantumChannel(2, 2, std::move(kraus), "pauli");
}

QuantumChannel werner_holevo(int d) {
  if (d < 2) throw DomainError("werner_holevo: dimension must be at least 2");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d - 1));
  std::vector<Matrix> kraus;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k(i, j) = scale;
      k(j, i) = -scale;
      kraus.push_back(std::move(k));
    }
  }
  return QuantumChannel(d, d, std::move(kraus), "werner-holevo");
}

GroupRep weyl_heisenberg_group(int d) {
  std::vector<UnitaryPair> elems;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Matrix w = weyl_operator(d, a, b);
      elems.push_back({w, w});
    }
  }
  return GroupRep::finite(std::move(elems)).with_name("weyl-heisenberg(" + std::to_string(d) + ")");
}

GroupRep trivial_group(int d) {
  const Matrix id = Matrix::Identity(d, d);
  return GroupRep::finite({{id, id}}).with_name("trivial");
}

GroupRep haar_pairs(int d) {
  return GroupRep::sampled(
      d, d,
      [d](Rng& rng) {
        const Matrix u = haar_unitary(d, rng);
        return UnitaryPair{u, u};
      },
      "haar(U,U)");
}

GroupRep conjugate_haar_pairs(int d) {
  return GroupRep::sampled(
      d, d,
      [d](Rng& rng) {
        const Matrix u = haar_unitary(d, rng);
        return UnitaryPair{u, u.conjugate()};
      },
      "haar(U,conj U)");
}

CovarianceReport check_covariance(const QuantumChannel& channel, const GroupRep& group, int samples,
                                  std::uint64_t seed) {
  if (group.dim_in() != channel.dim_in() || group.dim_out() != channel.dim_out()) {
    throw DimensionMismatch("check_covariance: representation dimensions do not match the channel");
  }
  if (samples < 1) throw DomainError("check_covariance: samples must be positive");
  Rng rng(seed);
  CovarianceReport report;
  auto residual = [&](const UnitaryPair& g, const Matrix& rho) {
    const Matrix lhs = g.out * apply_kraus(channel.kraus(), rho) * g.out.adjoint();
    const Matrix rhs = apply_kraus(channel.kraus(), g.in * rho * g.in.adjoint());
    return max_abs(lhs - rhs);
  };
  if (group.is_finite()) {
    for (int s = 0; s < samples; ++s) {
      const Matrix rho = random_state(channel.dim_in(), rng).matrix();
      for (const auto& g : group.elements()) report.max_residual = std::max(report.max_residual, residual(g, rho));
    }
    report.elements_tested = static_cast<int>(group.elements().size());
  } else {
    for (int s = 0; s < samples; ++s) {
      const UnitaryPair g = group.sample(rng);
      const Matrix rho = random_state(channel.dim_in(), rng).matrix();
      report.max_residual = std::max(report.max_residual, residual(g, rho));
    }
    report.elements_tested = samples;
  }
  report.states_tested = samples;
  report.passed = report.max_residual <= 1e-9;
  return report;
}

namespace {

// Orthonormal basis (columns, column-major vec convention) of {X : g X = X g for all g}.
Matrix commutant_basis(const std::vector<Matrix>& gs) {
  const auto d = gs.front().rows();
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(gs.size()) * d * d, d * d);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    stacked.block(static_cast<Eigen::Index>(k) * d * d, 0, d * d, d * d) =
        kron(id, gs[k]) - kron(gs[k].transpose(), id);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const RealVector sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < d * d; ++i) {
    if (i >= sv.size() || sv(i) < 1e-8 * scale) null_cols.push_back(i);
  }
  Matrix basis(d * d, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t c = 0; c < null_cols.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(null_cols[c]);
  return basis;
}

}  // namespace

IrreducibilityReport check_irreducibility(const GroupRep& group, RepSide side, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("check_irreducibility: samples must be positive");
  const bool out = side == RepSide::Output;
  const int d = out ? group.dim_out() : group.dim_in();
  Rng rng(seed);
  IrreducibilityReport report;
  report.samples = samples;
  const Matrix id = Matrix::Identity(d, d);

  if (group.is_finite()) {
    report.method = "twirl";
    for (int s = 0; s < samples; ++s) {
      const Matrix x = random_hermitian(d, rng);
      Matrix twirl = Matrix::Zero(d, d);
      for (const auto& g : group.elements()) {
        const Matrix& u = out ? g.out : g.in;
        twirl += u * x * u.adjoint();
      }
      twirl /= static_cast<double>(group.elements().size());
      const Matrix target = id * (x.trace() / static_cast<double>(d));
      report.max_residual = std::max(report.max_residual, max_abs(twirl - target));
    }
  } else {
    report.method = "commutant-projection";
    std::vector<Matrix> gs;
    for (int k = 0; k < 8; ++k) {
      const UnitaryPair g = group.sample(rng);
      gs.push_back(out ? g.out : g.in);
    }
    const Matrix basis = commutant_basis(gs);
    for (int s = 0; s < samples; ++s) {
      const Matrix x = random_hermitian(d, rng);
      const Vector vx = Eigen::Map<const Vector>(x.data(), d * d);
      const Vector proj = basis * (basis.adjoint() * vx);
      const Matrix px = Eigen::Map<const Matrix>(proj.data(), d, d);
      const Matrix target = id * (x.trace() / static_cast<double>(d));
      report.max_residual = std::max(report.max_residual, max_abs(px - target));
    }
  }
  report.passed = report.max_residual <= 1e-8;
  return report;
}

CovarianceCertificate CovarianceCertificate::acknowledged_override() {
  CovarianceCertificate c;
  c.group = "override";
  c.override_acknowledged = true;
  return c;
}

CovarianceCertificate certify_covariance(const QuantumChannel& channel, const GroupRep& group, int samples,
                                         std::uint64_t seed) {
  const auto cov = check_covariance(channel, group, samples, seed);
  const auto irr = check_irreducibility(group, RepSide::Output, samples, derive_seed(seed, 1));
  CovarianceCertificate c;
  c.group = group.name();
  c.covariance_residual = cov.max_residual;
  c.irreducibility_residual = irr.max_residual;
  c.covariant = cov.passed;
  c.irreducible = irr.passed;
  return c;
}

GroupRep symmetry_group_for(const QuantumChannel& channel) {
  const std::string& label = channel.label();
  if (label == "depolarizing" || label == "identity" || label == "pauli") {
    return weyl_heisenberg_group(channel.dim_in());
  }
  if (label == "werner-holevo") return conjugate_haar_pairs(channel.dim_in());
  throw NotCertified("no known symmetry group for channel '" + label + "'");
}

CovarianceCertificate certify_named_channel(const QuantumChannel& channel, int samples, std::uint64_t seed) {
  return certify_covariance(channel, symmetry_group_for(channel), samples, seed);
}

double additivity_alpha_max(const QuantumChannel& channel) {
  const std::string& label = channel.label();
  if (label == "depolarizing" || label == "pauli") return 3.0;
  if (label == "werner-holevo") return 2.0;
  if (label == "identity") return 64.0;
  return 0.0;
}

}  // namespace strongconv
