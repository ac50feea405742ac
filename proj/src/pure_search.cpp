#include "strongconv/pure_search.hpp"

#include <cmath>

namespace strongconv {

Matrix output_of_pure(const std::vector<Matrix>& kraus, const Vector& psi) {
  const auto d = kraus.front().rows();
  Matrix out = Matrix::Zero(d, d);
  for (const auto& k : kraus) {
    const Vector v = k * psi;
    out.noalias() += v * v.adjoint();
  }
  return out;
}

LocalMax maximize_over_pure_states(const PureObjective& objective, const Vector& start,
                                   const SearchSettings& settings) {
  LocalMax best;
  best.psi = start / start.norm();
  Matrix grad;
  best.value = objective(best.psi, &grad);
  double step = settings.initial_step;
  int stalled = 0;

  Matrix cand_grad;
  for (int it = 0; it < settings.max_iters; ++it) {
    best.iterations = it + 1;
    const double before = best.value;
    bool moved = false;

    const Spectrum s = eigh(grad);
    const Vector top = s.vectors.col(s.dim() - 1);
    const double current = (best.psi.adjoint() * grad * best.psi)(0, 0).real();
    if (s.values(s.dim() - 1) - current > 0.0) {
      const double v = objective(top, &cand_grad);
      if (v > best.value) {
        best.psi = top;
        best.value = v;
        grad.swap(cand_grad);
        moved = true;
      }
    }

    if (!moved) {
      const Vector g = grad * best.psi - current * best.psi;
      const double gnorm = g.norm();
      if (gnorm == 0.0 || !std::isfinite(gnorm)) break;
      double t = step / gnorm;
      for (int b = 0; b < settings.max_backtracks; ++b) {
        Vector cand = best.psi + t * g;
        cand /= cand.norm();
        const double v = objective(cand, &cand_grad);
        if (v > best.value) {
          best.psi = cand;
          best.value = v;
          grad.swap(cand_grad);
          moved = true;
          step = std::min(2.0 * t * gnorm, 4.0);
          break;
        }
        t *= settings.step_shrink;
      }
      if (!moved) break;
    }

    if (best.value - before < settings.tolerance) {
      if (++stalled >= 3) break;
    } else {
      stalled = 0;
    }
  }
  return best;
}

}  // namespace strongconv
