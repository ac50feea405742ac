#pragma once

#include "strongconv/linalg.hpp"

#include <functional>
#include <vector>

namespace strongconv {

/// Objective on unit vectors psi. Returns the value and, when `gradient` is non-null, writes the
/// Hermitian gradient of the value with respect to P = |psi><psi|.
using PureObjective = std::function<double(const Vector& psi, Matrix* gradient)>;

struct SearchSettings {
  int max_iters = 500;
  /// First tangent step length; grows after success, shrinks by `step_shrink` while backtracking.
  double initial_step = 0.5;
  double step_shrink = 0.5;
  int max_backtracks = 40;
  /// Stop once three consecutive accepted moves each improve by less than this.
  double tolerance = 1e-12;
};

struct LocalMax {
  Vector psi;
  double value = 0.0;
  int iterations = 0;
};

/// Monotone local ascent on the unit sphere of C^d. Each iteration first tries the
/// conditional-gradient jump to the top eigenvector of the gradient (which is always an ascent
/// move for objectives convex in P), then falls back to a tangent-space step
/// psi + t (G psi - <psi|G|psi> psi) retracted to the sphere, with backtracking.
LocalMax maximize_over_pure_states(const PureObjective& objective, const Vector& start,
                                   const SearchSettings& settings);

/// sum_k (K_k psi)(K_k psi)^dagger
Matrix output_of_pure(const std::vector<Matrix>& kraus, const Vector& psi);

}  // namespace strongconv
