#include "sg/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "sg/rootfind.hpp"
#include "sg/spectral.hpp"

namespace sg {

namespace {

Field phi_sin(const Field& phi, const Field& u) {
  Field out(u.grid_ptr());
  kernels::phi_sin(u.grid().exec(), phi.values(), u.values(), out.values());
  return out;
}

// Energy restricted to the line (u0 + s du, v0 + s dv), with its exact
// derivative in s.
std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct EnergyLine {
  const State& base;
  const Field& du;
  const Field& dv;
  const Field& phi;
  double h0;

  State at(double s) const {
    State p{base.u, base.v};
    if (s != 0.0) {
      p.u.axpy(s, du);
      p.v.axpy(s, dv);
    }
    return p;
  }

  std::pair<double, double> operator()(double s) const {
    const State p = at(s);
    const Field lap = laplacian(p.u);
    const GridSpec& g = p.u.grid();
    const double h = kernels::energy_terms(g.exec(), g.weights(), p.u.values(), p.v.values(),
                                           lap.values(), phi.values())
                         .total();
    const double slope = kernels::energy_slope(g.exec(), g.weights(), p.u.values(), p.v.values(),
                                               lap.values(), phi.values(), du.values(), dv.values());
    return {h - h0, slope};
  }
};

Closure close_on_level_set(const State& base, const Field& du, const Field& dv, const Field& phi,
                           double h0, const SchemeConfig& cfg, double previous_multiplier,
                           const char* what) {
  const EnergyLine line{base, du, dv, phi, h0};
  const double tol = cfg.newton_tol * std::max(1.0, std::abs(h0));
  const double bound = 10.0 * (std::abs(previous_multiplier) + cfg.tau);

  NewtonResult r;
  try {
    r = newton_scalar(std::cref(line), 0.0, tol, cfg.newton_max_iter, bound);
  } catch (const NumericError& e) {
    throw StepError(std::string(what) + ": " + e.what(), std::nan(""), std::nan(""), 0);
  }
  if (r.diverged) {
    throw StepError(std::string(what) + ": multiplier iterate " + sci(r.root) +
                        " left the bound " + sci(bound),
                    r.residual, r.root, r.iterations);
  }
  if (!r.converged) {
    throw StepError(std::string(what) + ": Newton did not reach the energy level set in " +
                        std::to_string(r.iterations) + " iterations (residual " +
                        sci(r.residual) + ")",
                    r.residual, r.root, r.iterations);
  }
  return {line.at(r.root), r.root, r.iterations};
}

}  // namespace

void SchemeConfig::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ArgumentError("tau must be positive");
  if (!(t_end >= tau) || !std::isfinite(t_end)) throw ArgumentError("t_end must be at least tau");
  if (!(newton_tol > 0.0)) throw ArgumentError("newton_tol must be positive");
  if (newton_max_iter < 1) throw ArgumentError("newton_max_iter must be at least 1");
  const double n = std::round(t_end / tau);
  if (std::abs(n * tau - t_end) > 1e-9 * std::max(1.0, t_end)) {
    throw ArgumentError("t_end must be an integer multiple of tau");
  }
}

long SchemeConfig::steps() const { return std::lround(t_end / tau); }

// Both Crank-Nicolson passes solve for the increment delta = u - u^n rather
// than for u itself: v = (2/tau) delta - v^n then keeps full relative accuracy
// instead of inheriting the O(eps |u| / tau) cancellation of (2/tau)(u - u^n).

HalfStep predict(const Field& u_n, const Field& v_n, const Field& u_extrap, const Field& phi,
                 double tau) {
  require_same_grid(u_n, v_n, "predict");
  require_same_grid(u_n, u_extrap, "predict");
  require_same_grid(u_n, phi, "predict");
  const double c = 0.25 * tau * tau;
  // (I - c Lap) delta = c Lap u^n + tau/2 v^n - c phi sin(u_extrap)
  Field rhs = c * laplacian(u_n);
  rhs.axpy(0.5 * tau, v_n);
  rhs.axpy(-c, phi_sin(phi, u_extrap));
  const Field delta = helmholtz_solve(rhs, c);
  Field u_half = u_n + delta;
  Field v_half = (2.0 / tau) * delta;
  return {std::move(u_half), std::move(v_half)};
}

State correct_free(const Field& u_n, const Field& v_n, const Field& u_half, const Field& phi,
                   double tau) {
  require_same_grid(u_n, v_n, "correct_free");
  require_same_grid(u_n, u_half, "correct_free");
  require_same_grid(u_n, phi, "correct_free");
  const double c = 0.25 * tau * tau;
  // (I - c Lap) delta = 2c Lap u^n + tau v^n - tau^2/2 phi sin(u_half)
  Field rhs = (2.0 * c) * laplacian(u_n);
  rhs.axpy(tau, v_n);
  rhs.axpy(-0.5 * tau * tau, phi_sin(phi, u_half));
  const Field delta = helmholtz_solve(rhs, c);
  Field u = u_n + delta;
  Field v = (2.0 / tau) * delta;
  v -= v_n;
  return {std::move(u), std::move(v)};
}

namespace {

Field projection_direction(const State& free, const Field& phi) {
  Field d = phi_sin(phi, free.u);
  d -= laplacian(free.u);
  return d;
}

}  // namespace

State project_along(const State& free, const Field& phi, double lambda) {
  require_same_grid(free.u, phi, "project_along");
  State out{free.u, free.v};
  if (lambda == 0.0) return out;
  out.u.axpy(lambda, projection_direction(free, phi));
  out.v *= 1.0 + lambda;
  return out;
}

Closure projection_step(const State& free, const Field& phi, double h0, const SchemeConfig& cfg,
                        double previous_multiplier) {
  require_same_grid(free.u, free.v, "projection_step");
  require_same_grid(free.u, phi, "projection_step");
  const Field du = projection_direction(free, phi);
  return close_on_level_set(free, du, free.v, phi, h0, cfg, previous_multiplier,
                            "projection step");
}

SvmDirection svm_direction(const Field& u_n, const Field& v_n, const HalfStep& half,
                           const Field& phi, const SchemeConfig& cfg) {
  State free = correct_free(u_n, v_n, half.u, phi, cfg.tau);
  const Field g = supplementary_g(State{half.u, half.v}, phi, cfg.g_choice);
  Field omega = helmholtz_solve(g, 0.25 * cfg.tau * cfg.tau);
  omega *= 0.5 * cfg.tau * cfg.tau;
  Field gamma = (2.0 / cfg.tau) * omega;
  return {std::move(free), std::move(omega), std::move(gamma)};
}

State svm_update(const SvmDirection& dir, double beta) {
  State out{dir.free.u, dir.free.v};
  if (beta == 0.0) return out;
  out.u.axpy(beta, dir.omega);
  out.v.axpy(beta, dir.gamma);
  return out;
}

Closure svm_step(const Field& u_n, const Field& v_n, const HalfStep& half, const Field& phi,
                 double h0, const SchemeConfig& cfg, double previous_multiplier) {
  const SvmDirection dir = svm_direction(u_n, v_n, half, phi, cfg);
  return close_on_level_set(dir.free, dir.omega, dir.gamma, phi, h0, cfg, previous_multiplier,
                            "supplementary-variable step");
}

Closure advance(const State& current, const Field& u_extrap, const Field& phi, double h0,
                const SchemeConfig& cfg, double previous_multiplier) {
  const HalfStep half = predict(current.u, current.v, u_extrap, phi, cfg.tau);
  switch (cfg.scheme) {
    case Scheme::PcCnBaseline:
      return {correct_free(current.u, current.v, half.u, phi, cfg.tau), 0.0, 0};
    case Scheme::Pepm:
      return projection_step(correct_free(current.u, current.v, half.u, phi, cfg.tau), phi, h0,
                             cfg, previous_multiplier);
    case Scheme::Svm:
      return svm_step(current.u, current.v, half, phi, h0, cfg, previous_multiplier);
  }
  throw ArgumentError("unknown scheme");
}

Closure startup_step(const State& state0, const Field& phi, double h0, const SchemeConfig& cfg) {
  return advance(state0, state0.u, phi, h0, cfg, 0.0);
}

RunResult run(const SGProblem& problem, const SchemeConfig& cfg, std::size_t nx, std::size_t ny,
              const StepObserver& observer, Exec exec) {
  cfg.validate();
  const GridPtr grid = make_grid(problem.domain, cfg.grid_family, nx, ny, exec);
  const Field phi = sample(problem.phi, grid);
  State state{sample(problem.init_u, grid), sample(problem.init_v, grid)};

  RunResult result{state, energy(state, phi), {}};
  const double h0 = result.h0;
  if (!std::isfinite(h0)) throw NumericError("initial energy is not finite");
  if (observer) observer(StepDiagnostics{0, 0.0, h0, 0.0, 0.0, 0}, state);

  const long steps = cfg.steps();
  result.diagnostics.reserve(static_cast<std::size_t>(steps));
  Field u_prev = state.u;
  double multiplier = 0.0;
  for (long n = 1; n <= steps; ++n) {
    std::optional<Closure> next;
    try {
      if (n == 1) {
        next = startup_step(state, phi, h0, cfg);
      } else {
        Field extrap = 1.5 * state.u;
        extrap.axpy(-0.5, u_prev);
        next = advance(state, extrap, phi, h0, cfg, multiplier);
      }
    } catch (const StepError& e) {
      throw RunAborted(e, n, std::move(result.diagnostics));
    }
    u_prev = std::move(state.u);
    state = std::move(next->state);
    multiplier = next->multiplier;

    const double h = energy(state, phi);
    if (!std::isfinite(h)) {
      throw RunAborted(StepError("energy became non-finite", h, multiplier, next->iterations), n,
                       std::move(result.diagnostics));
    }
    const StepDiagnostics d{n, static_cast<double>(n) * cfg.tau, h, std::abs(h - h0), multiplier,
                            next->iterations};
    result.diagnostics.push_back(d);
    if (observer) observer(d, state);
  }
  result.final_state = std::move(state);
  return result;
}

}  // namespace sg
