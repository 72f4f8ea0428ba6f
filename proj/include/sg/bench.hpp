#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/integrators.hpp"
#include "sg/model.hpp"

namespace sg {

/// Exact breather u(x,t) = 4 atan(sin(c kappa t) sech(kappa x) / c) of
/// u_tt - u_xx + sin u = 0, kappa = 1/sqrt(1+c^2).
double breather_exact(double x, double t, double c);
double breather_kappa(double c);

struct ReferenceValue {
  std::string quantity;
  double value;
  std::string source;
};

struct BenchmarkCase {
  std::string name;
  std::string description;
  SGProblem problem;
  GridFamily default_family = GridFamily::MidPoint;
  std::size_t default_nx = 128;
  std::size_t default_ny = 128;
  double default_tau = 0.01;
  double default_t_end = 1.0;
  std::vector<ReferenceValue> reference_values;
};

/// The five preset problems: breather, line_perturbed, line_inhomogeneous,
/// ring and four_ring.
const std::vector<BenchmarkCase>& registry();
/// Throws ArgumentError for an unknown name.
const BenchmarkCase& find_case(const std::string& name);
/// Breather case on [-20,20] with a different velocity parameter.
BenchmarkCase make_breather_case(double c);

struct ErrorNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

/// L2 (grid norm of the difference) and max-norm errors against exact(x,y,t).
ErrorNorms error_norms(const Field& numeric, const Function3D& exact, double t);

enum class StudyAxis { Time, Space };

struct ConvergenceRow {
  double resolution = 0.0;  // tau (time axis) or N_x (space axis)
  double l2 = 0.0;
  double linf = 0.0;
  std::optional<double> order_l2;  // empty on the first row
  std::optional<double> order_linf;
};

struct ConvergenceTable {
  StudyAxis axis = StudyAxis::Time;
  std::vector<ConvergenceRow> rows;
  /// Space axis only: the finest level reached an error below 1e-9.
  bool spectral = false;
  /// Largest |multiplier| of each level's run, in row order.
  std::vector<double> max_multiplier;
};

struct StudyOptions {
  std::size_t fixed_n = 256;   // time axis
  double fixed_tau = 1e-4;     // space axis
  double t_end = 1.0;
};

/// Mesh-refinement study against the case's exact solution. For the time axis
/// `levels` holds step sizes; for the space axis, N_x values. Each level is an
/// independent run; levels execute concurrently.
///
/// Throws UnsupportedCaseError if the case has no exact solution.
ConvergenceTable convergence_study(const BenchmarkCase& bench_case, const SchemeConfig& base,
                                   StudyAxis axis, const std::vector<double>& levels,
                                   const StudyOptions& options = {});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sg
