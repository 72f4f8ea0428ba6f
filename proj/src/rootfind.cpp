#include "sg/rootfind.hpp"

#include <cmath>
#include <string>

#include "sg/errors.hpp"

namespace sg {

NewtonResult newton_scalar(const ValueAndSlope& fdf, double x0, double tol, int max_iter,
                           double iterate_bound) {
  if (!(tol > 0.0)) throw ArgumentError("newton_scalar: tolerance must be positive");
  if (max_iter < 1) throw ArgumentError("newton_scalar: max_iter must be at least 1");

  NewtonResult r;
  double x = x0;
  for (int it = 0;; ++it) {
    const auto [fx, dfx] = fdf(x);
    if (!std::isfinite(fx)) {
      throw NumericError("newton_scalar: non-finite residual at x = " + std::to_string(x));
    }
    r.root = x;
    r.residual = fx;
    r.iterations = it;
    r.residual_history.push_back(std::abs(fx));
    if (std::abs(fx) <= tol) {
      r.converged = true;
      return r;
    }
    if (it == max_iter) return r;
    if (!std::isfinite(dfx) || std::abs(dfx) < 1e-300) {
      throw NumericError("newton_scalar: degenerate derivative at x = " + std::to_string(x) +
                         " (residual " + std::to_string(fx) + ")");
    }
    x -= fx / dfx;
    if (std::abs(x) > iterate_bound) {
      r.root = x;
      r.iterations = it + 1;
      r.diverged = true;
      return r;
    }
  }
}

NewtonResult newton_scalar(const std::function<double(double)>& f,
                           const std::function<double(double)>& fprime, double x0, double tol,
                           int max_iter, double iterate_bound) {
  return newton_scalar([&](double x) { return std::pair{f(x), fprime(x)}; }, x0, tol, max_iter,
                       iterate_bound);
}

}  // namespace sg
