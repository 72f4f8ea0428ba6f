#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sg/errors.hpp"
#include "sg/grid.hpp"
#include "sg/model.hpp"

namespace sg {

enum class Scheme {
  Pepm,          // prediction-correction Crank-Nicolson + energy projection
  Svm,           // supplementary-variable relaxation
  PcCnBaseline,  // prediction-correction Crank-Nicolson alone; not conservative
};

struct SchemeConfig {
  Scheme scheme = Scheme::Pepm;
  GridFamily grid_family = GridFamily::MidPoint;
  GChoice g_choice = GChoice::G1;
  double tau = 0.01;
  double t_end = 1.0;
  double newton_tol = 1e-14;
  int newton_max_iter = 50;

  /// Throws ArgumentError on tau <= 0, t_end < tau, newton_tol <= 0 or a
  /// t_end that is not an integer multiple of tau.
  void validate() const;
  /// t_end / tau.
  long steps() const;
};

struct StepDiagnostics {
  long step = 0;
  double time = 0.0;
  double energy = 0.0;
  double energy_error = 0.0;  // |H^n - H^0|
  double multiplier = 0.0;    // lambda (projection), beta (SVM), 0 (baseline)
  int newton_iters = 0;
};

/// Half-level prediction (u^, v^) at t_{n+1/2}.
struct HalfStep {
  Field u;
  Field v;
};

/// Result of closing one step on the energy level set.
struct Closure {
  State state;
  double multiplier = 0.0;
  int iterations = 0;
};

/// Direction data for the supplementary-variable closure:
/// u^{n+1} = u~ + beta omega, v^{n+1} = v~ + beta gamma.
struct SvmDirection {
  State free;  // (u~, v~) from correct_free
  Field omega;
  Field gamma;
};

/// Linearised Crank-Nicolson prediction with the nonlinearity frozen at
/// u_extrap: ((3u^n - u^{n-1})/2 in general, u^n on the first step).
HalfStep predict(const Field& u_n, const Field& v_n, const Field& u_extrap, const Field& phi,
                 double tau);

/// Crank-Nicolson correction with the nonlinearity evaluated at u_half.
State correct_free(const Field& u_n, const Field& v_n, const Field& u_half, const Field& phi,
                   double tau);

/// (u~ + lambda(-Lap u~ + phi sin u~), (1 + lambda) v~).
State project_along(const State& free, const Field& phi, double lambda);

/// Finds lambda with energy(project_along(free, phi, lambda)) = h0 by Newton
/// from 0. Throws StepError when Newton fails.
Closure projection_step(const State& free, const Field& phi, double h0, const SchemeConfig& cfg,
                        double previous_multiplier = 0.0);

SvmDirection svm_direction(const Field& u_n, const Field& v_n, const HalfStep& half,
                           const Field& phi, const SchemeConfig& cfg);
State svm_update(const SvmDirection& dir, double beta);

/// Correction of the relaxed system with beta fixed by the energy constraint.
/// Throws StepError when Newton fails.
Closure svm_step(const Field& u_n, const Field& v_n, const HalfStep& half, const Field& phi,
                 double h0, const SchemeConfig& cfg, double previous_multiplier = 0.0);

/// One full step of the configured scheme from (u^n, v^n).
Closure advance(const State& current, const Field& u_extrap, const Field& phi, double h0,
                const SchemeConfig& cfg, double previous_multiplier = 0.0);

/// Two-level first step: prediction with u^0 in place of the extrapolation.
Closure startup_step(const State& state0, const Field& phi, double h0, const SchemeConfig& cfg);

struct RunResult {
  State final_state;
  double h0 = 0.0;
  std::vector<StepDiagnostics> diagnostics;  // one entry per completed step, step >= 1
};

/// Called with step 0 (initial data) and after every completed step.
using StepObserver = std::function<void(const StepDiagnostics&, const State&)>;

/// Thrown by run when a step fails; carries everything completed so far.
class RunAborted : public StepError {
 public:
  RunAborted(const StepError& cause, long step, std::vector<StepDiagnostics> done)
      : StepError("step " + std::to_string(step) + ": " + cause.what(), cause.residual(),
                  cause.iterate(), cause.iterations()),
        step_(step),
        diagnostics_(std::move(done)) {}
  long step() const { return step_; }
  const std::vector<StepDiagnostics>& diagnostics() const { return diagnostics_; }

 private:
  long step_;
  std::vector<StepDiagnostics> diagnostics_;
};

RunResult run(const SGProblem& problem, const SchemeConfig& cfg, std::size_t nx, std::size_t ny,
              const StepObserver& observer = {}, Exec exec = Exec::Parallel);

}  // namespace sg
