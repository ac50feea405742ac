#include "strongconv/codesim.hpp"

#include "strongconv/converse.hpp"
#include "strongconv/errors.hpp"
#include "strongconv/parallel.hpp"
#include "strongconv/random.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace strongconv {

std::string to_string(Generation g) {
  switch (g) {
    case Generation::ProductRandom:
      return "product-random";
    case Generation::EntangledRandom:
      return "entangled-random";
    case Generation::Orthogonal:
      return "orthogonal";
  }
  return "unknown";
}

Generation generation_from_string(const std::string& s) {
  if (s == "product-random") return Generation::ProductRandom;
  if (s == "entangled-random") return Generation::EntangledRandom;
  if (s == "orthogonal") return Generation::Orthogonal;
  throw ParseError("unknown codebook generation '" + s + "'");
}

std::size_t message_count(int n, double rate) {
  if (n < 1) throw DomainError("message_count: n must be at least 1");
  if (!(rate >= 0.0)) throw DomainError("message_count: rate must be nonnegative");
  const double bits = n * rate;
  if (bits > 40.0) throw ResourceExceeded("message_count: 2^{nR} is too large");
  return static_cast<std::size_t>(std::max(1.0, std::ceil(std::exp2(bits) - 1e-9)));
}

double Codebook::effective_rate() const {
  return std::log2(static_cast<double>(size())) / n;
}

namespace {

int checked_dim(int d, int n, const ResourceBudget& budget) {
  const long long dim = checked_power(d, n, budget.max_dim);
  if (dim < 0) {
    throw ResourceExceeded("dimension " + std::to_string(d) + "^" + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget.max_dim));
  }
  return static_cast<int>(dim);
}

void check_entries(std::size_t count, int dim, const ResourceBudget& budget) {
  const double entries = static_cast<double>(count) * dim * dim;
  if (entries > static_cast<double>(budget.max_kraus_entries)) {
    throw ResourceExceeded("codebook of " + std::to_string(count) + " words at dimension " + std::to_string(dim) +
                           " exceeds the entry budget");
  }
}

Matrix kron_power(const Matrix& k, int n) {
  Matrix out = k;
  for (int i = 1; i < n; ++i) out = kron(out, k);
  return out;
}

}  // namespace

Codebook make_codebook(int dim_in, int n, double rate, Generation generation, std::uint64_t seed,
                       const ResourceBudget& budget) {
  if (dim_in < 1) throw DomainError("make_codebook: dimension must be positive");
  const int dim = checked_dim(dim_in, n, budget);
  const std::size_t count = message_count(n, rate);
  check_entries(count, dim, budget);
  Codebook code;
  code.n = n;
  code.rate = rate;
  code.dim_in = dim_in;
  code.generation = generation;
  code.seed = seed;
  code.codewords.reserve(count);
  Rng rng(seed);
  for (std::size_t x = 0; x < count; ++x) {
    switch (generation) {
      case Generation::EntangledRandom:
        code.codewords.push_back(haar_vector(dim, rng));
        break;
      case Generation::ProductRandom: {
        Vector v = haar_vector(dim_in, rng);
        for (int i = 1; i < n; ++i) {
          const Vector f = haar_vector(dim_in, rng);
          Vector next(v.size() * f.size());
          for (Eigen::Index j = 0; j < v.size(); ++j) next.segment(j * f.size(), f.size()) = v(j) * f;
          v = std::move(next);
        }
        code.codewords.push_back(std::move(v));
        break;
      }
      case Generation::Orthogonal: {
        Vector v = Vector::Zero(dim);
        v(static_cast<Eigen::Index>(x % static_cast<std::size_t>(dim))) = 1.0;
        code.codewords.push_back(std::move(v));
        break;
      }
    }
  }
  return code;
}

Povm pgm_decoder(const std::vector<DensityMatrix>& outputs) {
  if (outputs.empty()) throw DomainError("pgm_decoder: no output states");
  const int d = outputs.front().dim();
  Matrix s = Matrix::Zero(d, d);
  for (const auto& o : outputs) {
    if (o.dim() != d) throw DimensionMismatch("pgm_decoder: output states differ in dimension");
    s += o.matrix();
  }
  const Spectrum spec = eigh(s);
  const Matrix t = pseudo_power(spec, -0.5);
  std::vector<Matrix> elements;
  elements.reserve(outputs.size());
  for (const auto& o : outputs) elements.push_back(hermitize(t * o.matrix() * t));
  elements.front() += Matrix::Identity(d, d) - support_projector(spec);
  return Povm(std::move(elements), 1e-9);
}

double exact_success_probability(const QuantumChannel& channel, const Codebook& code, const Povm& decoder,
                                 const ResourceBudget& budget) {
  if (code.dim_in != channel.dim_in()) throw DimensionMismatch("exact_success_probability: codebook input dimension");
  const int dout = checked_dim(channel.dim_out(), code.n, budget);
  check_entries(code.size(), dout, budget);
  if (decoder.dim() != dout) throw DimensionMismatch("exact_success_probability: decoder dimension");
  if (decoder.size() != code.size()) throw DimensionMismatch("exact_success_probability: decoder size");
  double p = 0.0;
  for (std::size_t x = 0; x < code.size(); ++x) {
    const Vector& psi = code.codewords[x];
    const Matrix out = apply_tensor_power(channel, code.n, psi * psi.adjoint());
    p += (decoder.elements()[x] * out).trace().real();
  }
  return std::clamp(p / static_cast<double>(code.size()), 0.0, 1.0);
}

double pgm_success_probability(const QuantumChannel& channel, const Codebook& code, const ResourceBudget& budget) {
  if (code.dim_in != channel.dim_in()) throw DimensionMismatch("pgm_success_probability: codebook input dimension");
  const int dout = checked_dim(channel.dim_out(), code.n, budget);
  check_entries(code.size(), dout, budget);
  const auto m = static_cast<Eigen::Index>(code.size());
  double p = 0.0;
  if (channel.kraus().size() == 1) {
    // Pure outputs K^{(x) n} psi_x: tr(E_x sigma_x) = |<v_x| T |v_x>|^2.
    const Matrix kn = kron_power(channel.kraus().front(), code.n);
    Matrix v(dout, m);
    for (Eigen::Index x = 0; x < m; ++x) v.col(x) = kn * code.codewords[static_cast<std::size_t>(x)];
    const Matrix t = pseudo_power(Matrix(v * v.adjoint()), -0.5);
    const Matrix tv = t * v;
    for (Eigen::Index x = 0; x < m; ++x) p += std::norm(v.col(x).dot(tv.col(x)));
  } else {
    std::vector<Matrix> outs;
    outs.reserve(code.size());
    Matrix s = Matrix::Zero(dout, dout);
    for (const auto& psi : code.codewords) {
      outs.push_back(hermitize(apply_tensor_power(channel, code.n, psi * psi.adjoint())));
      s += outs.back();
    }
    const Matrix t = pseudo_power(s, -0.5);
    for (const auto& o : outs) {
      const Matrix a = t * o;
      p += (a * a).trace().real();
    }
  }
  return std::clamp(p / static_cast<double>(m), 0.0, 1.0);
}

SimResult run_experiment(const QuantumChannel& channel, int n, double rate, int codebooks, Generation generation,
                         std::uint64_t seed, double exponent, const ResourceBudget& budget) {
  if (codebooks < 1) throw DomainError("run_experiment: codebooks must be at least 1");
  const int din = checked_dim(channel.dim_in(), n, budget);
  const int dout = checked_dim(channel.dim_out(), n, budget);
  check_entries(message_count(n, rate), std::max(din, dout), budget);

  SimResult r;
  r.n = n;
  r.rate_nominal = rate;
  r.codebooks = codebooks;
  r.generation = to_string(generation);
  r.seed = seed;
  r.exponent = exponent;
  r.envelope = success_probability_envelope(n, exponent);
  r.per_codebook = parallel_map<double>(static_cast<std::size_t>(codebooks), [&](std::size_t i) {
    const Codebook code = make_codebook(channel.dim_in(), n, rate, generation, derive_seed(seed, i), budget);
    return pgm_success_probability(channel, code, budget);
  });
  r.messages = message_count(n, rate);
  r.rate_effective = std::log2(static_cast<double>(r.messages)) / n;

  double sum = 0.0;
  r.p_succ_max = 0.0;
  r.p_succ_min = 1.0;
  for (double p : r.per_codebook) {
    sum += p;
    r.p_succ_max = std::max(r.p_succ_max, p);
    r.p_succ_min = std::min(r.p_succ_min, p);
  }
  r.p_succ_hat = sum / codebooks;
  if (codebooks > 1) {
    double ss = 0.0;
    for (double p : r.per_codebook) ss += (p - r.p_succ_hat) * (p - r.p_succ_hat);
    r.stderr_ = std::sqrt(ss / (codebooks - 1) / codebooks);
  }
  r.pass = r.p_succ_max <= r.envelope + 1e-9;
  return r;
}

double slope_estimate(const std::vector<SimResult>& results) {
  std::set<int> distinct;
  for (const auto& r : results) distinct.insert(r.n);
  if (distinct.size() < 3) throw DomainError("slope_estimate: need at least 3 distinct n values");
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& r : results) {
    if (!(r.p_succ_hat > 0.0)) throw DomainError("slope_estimate: zero success probability");
    const double x = r.n;
    const double y = -std::log2(r.p_succ_hat);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(results.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string sim_csv_header() {
  return "n,R_nominal,R_effective,p_succ_max,p_succ_mean,stderr,envelope,pass";
}

std::string to_csv_row(const SimResult& r) {
  std::ostringstream os;
  os << std::setprecision(6) << r.n << ',' << r.rate_nominal << ',' << r.rate_effective << ',' << r.p_succ_max << ','
     << r.p_succ_hat << ',' << r.stderr_ << ',' << r.envelope << ',' << (r.pass ? "true" : "false");
  return os.str();
}

Json to_json(const SimResult& r) {
  return Json{{"n", r.n},
              {"R_nominal", r.rate_nominal},
              {"R_effective", r.rate_effective},
              {"messages", r.messages},
              {"codebooks", r.codebooks},
              {"generation", r.generation},
              {"seed", r.seed},
              {"p_succ_mean", r.p_succ_hat},
              {"p_succ_max", r.p_succ_max},
              {"p_succ_min", r.p_succ_min},
              {"stderr", r.stderr_},
              {"exponent", r.exponent},
              {"envelope", r.envelope},
              {"pass", r.pass},
              {"per_codebook", r.per_codebook}};
}

}  // namespace strongconv
