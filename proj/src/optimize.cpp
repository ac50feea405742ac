#include "strongconv/optimize.hpp"

#include "strongconv/errors.hpp"
#include "strongconv/parallel.hpp"
#include "strongconv/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace strongconv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pow_clamped(double x, double p) {
  return x > 0.0 ? std::pow(x, p) : 0.0;
}

double log_clamped(double x) {
  return std::log(std::max(x, 1e-300));
}

double neg_entropy_nats(const RealVector& spectrum) {
  double v = 0.0;
  for (double l : spectrum) {
    if (l > 0.0) v += l * std::log(l);
  }
  return v;
}

// -S_alpha(Phi(|psi><psi|)) and its gradient with respect to |psi><psi|.
PureObjective neg_renyi_objective(const std::vector<Matrix>& kraus, AlphaParam alpha) {
  return [&kraus, alpha](const Vector& psi, Matrix* grad) {
    const Spectrum s = eigh(output_of_pure(kraus, psi));
    if (alpha.is_von_neumann()) {
      if (grad) *grad = apply_adjoint(kraus, apply_function(s, log_clamped)) / kLn2;
      return neg_entropy_nats(s.values) / kLn2;
    }
    const double a = alpha.value();
    double tr = 0.0;
    for (double l : s.values) tr += pow_clamped(l, a);
    if (grad) {
      const Matrix wpow = apply_function(s, [a](double x) { return pow_clamped(x, a - 1.0); });
      *grad = apply_adjoint(kraus, wpow) * (a / ((a - 1.0) * kLn2 * tr));
    }
    return std::log2(tr) / (a - 1.0);
  };
}

// D_alpha(Phi(|psi><psi|) || sigma) for sigma whose support contains every output.
PureObjective divergence_objective(const std::vector<Matrix>& kraus, const Spectrum& sigma, AlphaParam alpha) {
  if (alpha.is_von_neumann()) {
    const Matrix log_sigma = apply_on_support(sigma, [](double x) { return std::log(x); });
    return [&kraus, log_sigma](const Vector& psi, Matrix* grad) {
      const Matrix w = output_of_pure(kraus, psi);
      const Spectrum s = eigh(w);
      if (grad) *grad = apply_adjoint(kraus, apply_function(s, log_clamped) - log_sigma) / kLn2;
      return (neg_entropy_nats(s.values) - (w * log_sigma).trace().real()) / kLn2;
    };
  }
  const double a = alpha.value();
  const Matrix b = pseudo_power(sigma, 1.0 - a);
  return [&kraus, b, a](const Vector& psi, Matrix* grad) {
    const Spectrum s = eigh(output_of_pure(kraus, psi));
    const Matrix wa = apply_function(s, [a](double x) { return pow_clamped(x, a); });
    const double tr = (wa * b).trace().real();
    if (!(tr > 0.0)) {
      if (grad) *grad = Matrix::Zero(kraus.front().cols(), kraus.front().cols());
      return -kInf;
    }
    if (grad) {
      const Matrix d = frechet_derivative(
          s, b, [a](double x) { return pow_clamped(x, a); }, [a](double x) { return a * pow_clamped(x, a - 1.0); });
      *grad = apply_adjoint(kraus, d) / ((a - 1.0) * kLn2 * tr);
    }
    return std::log2(tr) / (a - 1.0);
  };
}

struct MultistartOutcome {
  std::vector<LocalMax> runs;
  std::size_t best = 0;
};

// Runs warm starts followed by `restarts` Haar-random starts; best = largest value, lowest index on ties.
MultistartOutcome multistart(const PureObjective& objective, int dim, int restarts, std::uint64_t seed,
                             std::span<const Vector> warm, const SearchSettings& settings) {
  const std::size_t total = warm.size() + static_cast<std::size_t>(restarts);
  MultistartOutcome out;
  out.runs = parallel_map<LocalMax>(total, [&](std::size_t i) {
    if (i < warm.size()) return maximize_over_pure_states(objective, warm[i], settings);
    Rng rng(derive_seed(seed, i - warm.size()));
    return maximize_over_pure_states(objective, haar_vector(dim, rng), settings);
  });
  for (std::size_t i = 1; i < out.runs.size(); ++i) {
    if (out.runs[i].value > out.runs[out.best].value) out.best = i;
  }
  return out;
}

void require_within_budget(const QuantumChannel& channel, const OptimizerConfig& cfg) {
  if (channel.dim_in() > cfg.budget.max_dim || channel.dim_out() > cfg.budget.max_dim) {
    throw ResourceExceeded("channel dimension exceeds budget " + std::to_string(cfg.budget.max_dim));
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1 || multi_copy_restarts < 1) throw DomainError("optimizer restarts must be at least 1");
  if (!(tolerance > 0.0)) throw DomainError("optimizer tolerance must be positive");
  if (max_iters < 1) throw DomainError("optimizer max_iters must be at least 1");
  if (!(step_shrink > 0.0 && step_shrink < 1.0)) throw DomainError("step_shrink must lie in (0, 1)");
}

SearchSettings OptimizerConfig::search() const {
  return SearchSettings{max_iters, initial_step, step_shrink, max_backtracks, tolerance};
}

// ------------------------------------------------------------------ minimum output entropy

MinOutputResult min_output_renyi(const QuantumChannel& channel, AlphaParam alpha, const OptimizerConfig& cfg,
                                 std::span<const Vector> warm_starts) {
  cfg.validate();
  require_within_budget(channel, cfg);
  for (const auto& w : warm_starts) {
    if (w.size() != channel.dim_in()) throw DimensionMismatch("min_output_renyi: warm start has wrong dimension");
  }
  const PureObjective objective = neg_renyi_objective(channel.kraus(), alpha);
  const auto ms = multistart(objective, channel.dim_in(), cfg.restarts, cfg.seed, warm_starts, cfg.search());

  MinOutputResult result;
  const LocalMax& best = ms.runs[ms.best];
  result.value = -best.value;
  result.argmin_vector = best.psi;
  result.argmin_state = DensityMatrix::pure(best.psi);
  for (const auto& r : ms.runs) {
    result.per_restart_values.push_back(-r.value);
    if (std::abs(-r.value - result.value) <= cfg.agreement_tol) ++result.restarts_agreeing;
  }
  return result;
}

double chi_alpha_star_covariant(const QuantumChannel& channel, AlphaParam alpha, const OptimizerConfig& cfg,
                                const CovarianceCertificate& cert) {
  if (!cert.valid()) {
    throw NotCertified("chi_alpha_star_covariant: channel '" + channel.label() +
                       "' lacks a passing covariance/irreducibility certificate");
  }
  return std::log2(static_cast<double>(channel.dim_out())) - min_output_renyi(channel, alpha, cfg).value;
}

// ------------------------------------------------------------------ inner maximization

namespace {

MaxDivergence inner_max(const std::vector<Matrix>& kraus, const Spectrum& sigma, AlphaParam alpha, int restarts,
                        std::uint64_t seed, std::span<const Vector> warm, const SearchSettings& settings) {
  const auto din = kraus.front().cols();
  const auto dout = kraus.front().rows();
  const Matrix outside = Matrix::Identity(dout, dout) - support_projector(sigma);
  const Matrix leak_in = apply_adjoint(kraus, outside);
  MaxDivergence out;
  if (leak_in.trace().real() > 1e-10 * static_cast<double>(din)) {
    const Spectrum ls = eigh(leak_in);
    out.infinite = true;
    out.value = kInf;
    out.argmax = ls.vectors.col(ls.dim() - 1);
    return out;
  }
  const PureObjective objective = divergence_objective(kraus, sigma, alpha);
  const auto ms = multistart(objective, static_cast<int>(din), restarts, seed, warm, settings);
  out.value = ms.runs[ms.best].value;
  out.argmax = ms.runs[ms.best].psi;
  return out;
}

}  // namespace

MaxDivergence max_output_divergence(const QuantumChannel& channel, const DensityMatrix& sigma, AlphaParam alpha,
                                    const OptimizerConfig& cfg, std::span<const Vector> warm_starts) {
  cfg.validate();
  if (sigma.dim() != channel.dim_out()) throw DimensionMismatch("max_output_divergence: sigma dimension");
  return inner_max(channel.kraus(), eigh(sigma.matrix()), alpha, cfg.restarts, cfg.seed, warm_starts, cfg.search());
}

// ------------------------------------------------------------------ minimax bounds

namespace {

struct ParamState {
  Spectrum shifted;  // spectrum of H - max(h)
  RealVector weights;
  double partition = 0.0;
  Matrix sigma;
};

ParamState parametrized_state(const Matrix& h) {
  ParamState p;
  p.shifted = eigh(h);
  p.shifted.values.array() -= p.shifted.values.maxCoeff();
  p.weights = p.shifted.values.array().exp();
  p.partition = p.weights.sum();
  p.sigma = p.shifted.vectors * (p.weights / p.partition).cast<cplx>().asDiagonal() * p.shifted.vectors.adjoint();
  p.sigma = hermitize(p.sigma);
  return p;
}

struct OuterMap {
  int dim;
  std::function<Matrix(const Matrix&)> forward;
  std::function<Matrix(const Matrix&)> adjoint;
};

struct ActiveOutput {
  Matrix omega;
  Matrix omega_alpha;    // omega^alpha (alpha > 1)
  double neg_entropy = 0.0;  // tr omega ln omega (alpha = 1)
};

class SmoothedMax {
 public:
  SmoothedMax(AlphaParam alpha, const OuterMap& map) : alpha_(alpha), map_(map) {}

  void add(const Matrix& omega) {
    for (const auto& a : active_) {
      if (max_abs(a.omega - omega) < 1e-9) return;
    }
    ActiveOutput a;
    a.omega = omega;
    const Spectrum s = eigh(omega);
    if (alpha_.is_von_neumann()) {
      a.neg_entropy = neg_entropy_nats(s.values);
    } else {
      const double al = alpha_.value();
      a.omega_alpha = apply_function(s, [al](double x) { return pow_clamped(x, al); });
    }
    active_.push_back(std::move(a));
  }

  bool empty() const { return active_.empty(); }

  // Smoothed max tau log sum exp(D_i / tau) at H, with its gradient in H when requested.
  double eval(const Matrix& h, double tau, Matrix* grad) const {
    const ParamState p = parametrized_state(h);
    const Spectrum so = eigh(map_.forward(p.sigma));
    std::vector<double> d(active_.size());
    std::vector<double> tr(active_.size(), 0.0);
    const bool vn = alpha_.is_von_neumann();
    const double a = alpha_.value();
    Matrix fsigma;
    if (vn) {
      fsigma = apply_function(so, log_clamped);
    } else {
      fsigma = apply_function(so, [a](double x) { return std::pow(std::max(x, 1e-300), 1.0 - a); });
    }
    for (std::size_t i = 0; i < active_.size(); ++i) {
      if (vn) {
        d[i] = (active_[i].neg_entropy - (active_[i].omega * fsigma).trace().real()) / kLn2;
      } else {
        tr[i] = (active_[i].omega_alpha * fsigma).trace().real();
        d[i] = std::log2(tr[i]) / (a - 1.0);
      }
    }
    const double dmax = *std::max_element(d.begin(), d.end());
    double z = 0.0;
    std::vector<double> w(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      w[i] = std::exp((d[i] - dmax) / tau);
      z += w[i];
    }
    const double value = dmax + tau * std::log(z);
    if (!grad) return value;

    Matrix direction = Matrix::Zero(so.dim(), so.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double wi = w[i] / z;
      if (vn) {
        direction += wi * active_[i].omega;
      } else {
        direction += (wi / ((a - 1.0) * kLn2 * tr[i])) * active_[i].omega_alpha;
      }
    }
    Matrix g_out;
    if (vn) {
      g_out = -frechet_derivative(so, direction, log_clamped, [](double x) { return 1.0 / std::max(x, 1e-300); }) /
              kLn2;
    } else {
      g_out = frechet_derivative(
          so, direction, [a](double x) { return std::pow(std::max(x, 1e-300), 1.0 - a); },
          [a](double x) { return (1.0 - a) * std::pow(std::max(x, 1e-300), -a); });
    }
    const Matrix g_param = hermitize(map_.adjoint(g_out));
    const Matrix dexp = frechet_derivative(
        p.shifted, g_param, [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); });
    const Matrix expm = p.shifted.vectors * p.weights.cast<cplx>().asDiagonal() * p.shifted.vectors.adjoint();
    const double g_dot_sigma = (g_param * p.sigma).trace().real();
    *grad = hermitize((dexp - g_dot_sigma * expm) / p.partition);
    return value;
  }

 private:
  AlphaParam alpha_;
  const OuterMap& map_;
  std::vector<ActiveOutput> active_;
};

struct OuterResult {
  double value = kInf;
  Matrix sigma;
  int iterations = 0;
};

OuterResult minimize_outer(const std::vector<Matrix>& kraus, const OuterMap& map, AlphaParam alpha,
                           const OptimizerConfig& cfg, std::uint64_t stream) {
  constexpr int kMaxOuter = 80;
  constexpr int kSmoothSteps = 30;
  constexpr int kPatience = 8;
  Rng rng(derive_seed(cfg.seed, stream));
  Matrix h = 0.5 * random_hermitian(map.dim, rng);
  SmoothedMax smooth(alpha, map);
  std::vector<Vector> found;
  const int inner_restarts = std::max(4, cfg.restarts / 4);
  const SearchSettings settings = cfg.search();

  double best = kInf;
  Matrix best_h = h;
  int last_improvement = 0;
  double tau = 0.05;
  double step = 1.0;
  int k = 0;
  for (; k < kMaxOuter; ++k) {
    const ParamState p = parametrized_state(h);
    const Spectrum so = eigh(map.forward(p.sigma));
    const std::size_t nwarm = std::min<std::size_t>(found.size(), 8);
    const std::span<const Vector> warm(found.data() + (found.size() - nwarm), nwarm);
    const MaxDivergence mx =
        inner_max(kraus, so, alpha, inner_restarts, derive_seed(cfg.seed, stream * 7919 + 1000 + k), warm, settings);
    if (mx.value < best - 1e-12) {
      best = mx.value;
      best_h = h;
      last_improvement = k;
    }
    if (k - last_improvement >= kPatience) break;
    found.push_back(mx.argmax);
    smooth.add(output_of_pure(kraus, mx.argmax));

    Matrix grad;
    double f = smooth.eval(h, tau, &grad);
    for (int j = 0; j < kSmoothSteps; ++j) {
      const double g2 = (grad * grad).trace().real();
      if (!(g2 > 1e-30)) break;
      bool accepted = false;
      double t = step;
      for (int b = 0; b < 40; ++b) {
        const Matrix cand = h - t * grad;
        Matrix cand_grad;
        const double fc = smooth.eval(cand, tau, &cand_grad);
        if (fc <= f - 1e-4 * t * g2) {
          h = cand;
          f = fc;
          grad = std::move(cand_grad);
          step = std::min(2.0 * t, 64.0);
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        step = std::max(step * 0.25, 1e-12);
        break;
      }
    }
    tau = std::max(1e-7, tau * 0.5);
  }

  const ParamState p = parametrized_state(best_h);
  const Spectrum so = eigh(map.forward(p.sigma));
  const MaxDivergence final_max =
      inner_max(kraus, so, alpha, cfg.restarts, derive_seed(cfg.seed, stream * 7919 + 999), found, settings);
  OuterResult out;
  out.value = final_max.value;
  out.sigma = p.sigma;
  out.iterations = k;
  return out;
}

}  // namespace

MinimaxBounds chi_alpha_star_minimax_bounds(const QuantumChannel& channel, AlphaParam alpha,
                                            const OptimizerConfig& cfg) {
  cfg.validate();
  require_within_budget(channel, cfg);
  const auto& kraus = channel.kraus();
  const OuterMap lower_map{channel.dim_out(), [](const Matrix& s) { return s; }, [](const Matrix& g) { return g; }};
  const OuterMap upper_map{channel.dim_in(), [&kraus](const Matrix& s) { return hermitize(apply_kraus(kraus, s)); },
                           [&kraus](const Matrix& g) { return apply_adjoint(kraus, g); }};
  const OuterResult lo = minimize_outer(kraus, lower_map, alpha, cfg, 11);
  const OuterResult up = minimize_outer(kraus, upper_map, alpha, cfg, 12);
  MinimaxBounds b;
  b.lower = lo.value;
  b.upper = up.value;
  b.sigma_out = DensityMatrix(lo.sigma, 1e-9);
  b.sigma_in = DensityMatrix(up.sigma, 1e-9);
  b.outer_iterations = lo.iterations + up.iterations;
  return b;
}

// ------------------------------------------------------------------ ensemble search

namespace {

struct EnsembleEval {
  double value = -kInf;
  std::vector<Matrix> state_grads;
  std::vector<double> prob_grads;
};

EnsembleEval eval_ensemble(const std::vector<Matrix>& kraus, AlphaParam alpha, const std::vector<Vector>& psis,
                           const std::vector<double>& probs, bool need_grad) {
  const std::size_t k = psis.size();
  const auto dout = kraus.front().rows();
  std::vector<Spectrum> specs;
  specs.reserve(k);
  for (const auto& psi : psis) specs.push_back(eigh(output_of_pure(kraus, psi)));
  EnsembleEval e;
  if (need_grad) {
    e.state_grads.resize(k);
    e.prob_grads.resize(k);
  }

  if (alpha.is_von_neumann()) {
    Matrix avg = Matrix::Zero(dout, dout);
    double avg_neg_entropy = 0.0;
    std::vector<double> neg(k);
    for (std::size_t x = 0; x < k; ++x) {
      avg += probs[x] * (specs[x].vectors * specs[x].values.cast<cplx>().asDiagonal() * specs[x].vectors.adjoint());
      neg[x] = neg_entropy_nats(specs[x].values);
      avg_neg_entropy += probs[x] * neg[x];
    }
    const Spectrum sa = eigh(avg);
    e.value = (-neg_entropy_nats(sa.values) + avg_neg_entropy) / kLn2;
    if (need_grad) {
      const Matrix log_avg = apply_function(sa, log_clamped);
      for (std::size_t x = 0; x < k; ++x) {
        const Matrix wx = specs[x].vectors * specs[x].values.cast<cplx>().asDiagonal() * specs[x].vectors.adjoint();
        e.prob_grads[x] = (-(wx * log_avg).trace().real() + neg[x]) / kLn2;
        e.state_grads[x] = probs[x] * apply_adjoint(kraus, apply_function(specs[x], log_clamped) - log_avg) / kLn2;
      }
    }
    return e;
  }

  const double a = alpha.value();
  std::vector<Matrix> wa(k);
  Matrix z = Matrix::Zero(dout, dout);
  for (std::size_t x = 0; x < k; ++x) {
    wa[x] = apply_function(specs[x], [a](double v) { return pow_clamped(v, a); });
    z += probs[x] * wa[x];
  }
  const Spectrum sz = eigh(z);
  double t = 0.0;
  for (double l : sz.values) t += pow_clamped(l, 1.0 / a);
  e.value = a / (a - 1.0) * std::log2(t);
  if (need_grad) {
    const Matrix y = pseudo_power(sz, (1.0 - a) / a);
    const double scale = 1.0 / ((a - 1.0) * kLn2 * t);
    for (std::size_t x = 0; x < k; ++x) {
      e.prob_grads[x] = (y * wa[x]).trace().real() * scale;
      const Matrix d = frechet_derivative(
          specs[x], y, [a](double v) { return pow_clamped(v, a); }, [a](double v) { return a * pow_clamped(v, a - 1.0); });
      e.state_grads[x] = apply_adjoint(kraus, d) * (probs[x] * scale);
    }
  }
  return e;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  std::vector<double> p(logits.size());
  double z = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    z += p[i];
  }
  for (auto& v : p) v /= z;
  return p;
}

struct EnsembleRun {
  std::vector<Vector> psis;
  std::vector<double> probs;
  double value = -kInf;
};

EnsembleRun ascend_ensemble(const std::vector<Matrix>& kraus, AlphaParam alpha, int k, const OptimizerConfig& cfg,
                            Rng& rng) {
  const auto din = static_cast<int>(kraus.front().cols());
  EnsembleRun run;
  for (int x = 0; x < k; ++x) run.psis.push_back(haar_vector(din, rng));
  std::vector<double> logits(static_cast<std::size_t>(k), 0.0);
  run.probs = softmax(logits);
  EnsembleEval cur = eval_ensemble(kraus, alpha, run.psis, run.probs, true);
  double step = cfg.initial_step;
  int stalled = 0;
  for (int it = 0; it < cfg.max_iters; ++it) {
    std::vector<Vector> dirs(run.psis.size());
    std::vector<double> dlogit(run.psis.size());
    double mean_pg = 0.0;
    for (std::size_t x = 0; x < run.psis.size(); ++x) mean_pg += run.probs[x] * cur.prob_grads[x];
    double norm2 = 0.0;
    for (std::size_t x = 0; x < run.psis.size(); ++x) {
      const Vector gp = cur.state_grads[x] * run.psis[x];
      const cplx along = run.psis[x].dot(gp);
      dirs[x] = gp - along * run.psis[x];
      dlogit[x] = run.probs[x] * (cur.prob_grads[x] - mean_pg);
      norm2 += dirs[x].squaredNorm() + dlogit[x] * dlogit[x];
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 1e-14)) break;
    bool accepted = false;
    double t = step / norm;
    for (int b = 0; b < cfg.max_backtracks; ++b) {
      std::vector<Vector> cand(run.psis.size());
      std::vector<double> cand_logits(logits.size());
      for (std::size_t x = 0; x < run.psis.size(); ++x) {
        cand[x] = run.psis[x] + t * dirs[x];
        cand[x] /= cand[x].norm();
        cand_logits[x] = logits[x] + t * dlogit[x];
      }
      const auto cand_probs = softmax(cand_logits);
      EnsembleEval ce = eval_ensemble(kraus, alpha, cand, cand_probs, true);
      if (ce.value > cur.value) {
        const double gain = ce.value - cur.value;
        run.psis = std::move(cand);
        logits = std::move(cand_logits);
        run.probs = cand_probs;
        cur = std::move(ce);
        step = std::min(2.0 * t * norm, 4.0);
        accepted = true;
        stalled = gain < cfg.tolerance ? stalled + 1 : 0;
        break;
      }
      t *= cfg.step_shrink;
    }
    if (!accepted || stalled >= 3) break;
  }
  run.value = cur.value;
  return run;
}

}  // namespace

EnsembleSearchResult optimal_ensemble_search(const QuantumChannel& channel, AlphaParam alpha, int k,
                                             const OptimizerConfig& cfg) {
  cfg.validate();
  require_within_budget(channel, cfg);
  if (k < 1) throw DomainError("optimal_ensemble_search: k must be at least 1");
  const auto& kraus = channel.kraus();
  if (k == 1) {
    Rng rng(derive_seed(cfg.seed, 0));
    const Vector psi = haar_vector(channel.dim_in(), rng);
    std::vector<DensityMatrix> states{DensityMatrix(hermitize(output_of_pure(kraus, psi)), 1e-9)};
    return EnsembleSearchResult{Ensemble({1.0}, std::move(states)), {psi}, 0.0};
  }
  const auto runs = parallel_map<EnsembleRun>(static_cast<std::size_t>(cfg.restarts), [&](std::size_t i) {
    Rng rng(derive_seed(cfg.seed, i));
    return ascend_ensemble(kraus, alpha, k, cfg, rng);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].value > runs[best].value) best = i;
  }
  const EnsembleRun& r = runs[best];
  std::vector<DensityMatrix> states;
  for (const auto& psi : r.psis) states.emplace_back(hermitize(output_of_pure(kraus, psi)), 1e-9);
  std::vector<double> probs = r.probs;
  double total = 0.0;
  for (double p : probs) total += p;
  *std::max_element(probs.begin(), probs.end()) += 1.0 - total;
  Ensemble ens(std::move(probs), std::move(states));
  const double value = chi_alpha(ens, alpha);
  return EnsembleSearchResult{std::move(ens), r.psis, value};
}

MaximalDistanceReport maximal_distance_check(const QuantumChannel& channel, const Ensemble& ens, AlphaParam alpha,
                                             const OptimizerConfig& cfg) {
  cfg.validate();
  if (ens.dim() != channel.dim_out()) throw DimensionMismatch("maximal_distance_check: ensemble dimension");
  MaximalDistanceReport r;
  r.chi_alpha = chi_alpha(ens, alpha);
  const DensityMatrix mu = mu_state(ens, alpha);
  const MaxDivergence mx = max_output_divergence(channel, mu, alpha, cfg);
  r.max_divergence = mx.value;
  r.infinite = mx.infinite;
  r.gap = mx.infinite ? kInf : mx.value - r.chi_alpha;
  r.passed = !mx.infinite && r.gap <= 1e-3;
  return r;
}

// ------------------------------------------------------------------ additivity

AdditivityReport additivity_check(const QuantumChannel& channel, AlphaParam alpha, int copies,
                                  const OptimizerConfig& cfg) {
  if (copies != 2 && copies != 3) throw DomainError("additivity_check: copies must be 2 or 3");
  const QuantumChannel power = tensor_power(channel, copies, cfg.budget);
  const MinOutputResult single = min_output_renyi(channel, alpha, cfg);

  Vector product = single.argmin_vector;
  for (int c = 1; c < copies; ++c) {
    const Vector prev = product;
    product.resize(prev.size() * single.argmin_vector.size());
    for (Eigen::Index i = 0; i < prev.size(); ++i) {
      product.segment(i * single.argmin_vector.size(), single.argmin_vector.size()) = prev(i) * single.argmin_vector;
    }
  }
  OptimizerConfig multi_cfg = cfg;
  multi_cfg.restarts = cfg.multi_copy_restarts;
  multi_cfg.seed = derive_seed(cfg.seed, 0xadd);
  const std::vector<Vector> warm{product};
  const MinOutputResult multi = min_output_renyi(power, alpha, multi_cfg, warm);

  AdditivityReport r;
  r.copies = copies;
  r.single_copy = single.value;
  r.multi_copy = multi.value;
  r.gap = copies * single.value - multi.value;
  r.subadditive = r.gap >= -1e-6;
  r.additive = std::abs(r.gap) <= 1e-4;
  r.claim_in_range = alpha.value() <= additivity_alpha_max(channel);
  return r;
}

}  // namespace strongconv
