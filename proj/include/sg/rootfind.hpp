#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace sg {

struct NewtonResult {
  double root = 0.0;
  int iterations = 0;     // Newton updates performed
  double residual = 0.0;  // f(root)
  bool converged = false;
  bool diverged = false;  // an iterate left the caller's bound
  std::vector<double> residual_history;  // |f| at every evaluated iterate
};

/// Returns (f(x), f'(x)) from one evaluation.
using ValueAndSlope = std::function<std::pair<double, double>(double)>;

/// Plain Newton iteration for f(x) = 0 stopping on |f(x)| <= tol.
///
/// Throws NumericError when f is non-finite or |f'| < 1e-300 at an iterate.
/// Running out of iterations, or |x| exceeding iterate_bound, returns a
/// non-converged result for the caller to act on.
NewtonResult newton_scalar(const ValueAndSlope& fdf, double x0, double tol, int max_iter,
                           double iterate_bound = std::numeric_limits<double>::infinity());

NewtonResult newton_scalar(const std::function<double(double)>& f,
                           const std::function<double(double)>& fprime, double x0, double tol,
                           int max_iter,
                           double iterate_bound = std::numeric_limits<double>::infinity());

}  // namespace sg
