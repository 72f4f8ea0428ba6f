#include "sg/bench.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "sg/errors.hpp"

namespace sg {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

constexpr double kBreatherVelocity = 0.5;

BenchmarkCase line_perturbed() {
  BenchmarkCase bc;
  bc.name = "line_perturbed";
  bc.description = "perturbed line soliton, phi = 1";
  bc.problem.domain = {-7.0, 7.0, -7.0, 7.0};
  bc.problem.phi = [](double, double) { return 1.0; };
  bc.problem.init_u = [](double x, double y) {
    return 4.0 * std::atan(std::exp(x + 1.0 - 2.0 * sech(y + 7.0) - 2.0 * sech(y - 7.0)));
  };
  bc.problem.init_v = [](double, double) { return 0.0; };
  bc.default_t_end = 11.0;
  return bc;
}

BenchmarkCase line_inhomogeneous() {
  BenchmarkCase bc;
  bc.name = "line_inhomogeneous";
  bc.description = "line soliton in an inhomogeneous Josephson junction";
  bc.problem.domain = {-7.0, 7.0, -7.0, 7.0};
  bc.problem.phi = [](double x, double y) {
    const double s = sech(std::hypot(x, y));
    return 1.0 + s * s;
  };
  bc.problem.init_u = [](double x, double) {
    return 4.0 * std::atan(std::exp((x - 3.5) / 0.954));
  };
  bc.problem.init_v = [](double x, double) { return 0.629 * sech(std::exp((x - 3.5) / 0.954)); };
  bc.default_t_end = 18.0;
  return bc;
}

BenchmarkCase ring() {
  BenchmarkCase bc;
  bc.name = "ring";
  bc.description = "circular ring soliton, phi = 1";
  bc.problem.domain = {-14.0, 14.0, -14.0, 14.0};
  bc.problem.phi = [](double, double) { return 1.0; };
  bc.problem.init_u = [](double x, double y) {
    return 4.0 * std::atan(std::exp(3.0 - std::hypot(x, y)));
  };
  bc.problem.init_v = [](double, double) { return 0.0; };
  bc.default_t_end = 15.0;
  return bc;
}

// Four expanding rings; the quarter domain [-30,10]^2 carries the other three
// through the Neumann reflections at x = 10 and y = 10.
BenchmarkCase four_ring() {
  BenchmarkCase bc;
  bc.name = "four_ring";
  bc.description = "collision of four circular ring solitons, phi = 1";
  bc.problem.domain = {-30.0, 10.0, -30.0, 10.0};
  bc.problem.phi = [](double, double) { return 1.0; };
  auto arg = [](double x, double y) {
    return std::exp((4.0 - std::hypot(x + 3.0, y + 3.0)) / 0.436);
  };
  bc.problem.init_u = [arg](double x, double y) { return 4.0 * std::atan(arg(x, y)); };
  bc.problem.init_v = [arg](double x, double y) { return 4.13 * sech(arg(x, y)); };
  bc.default_t_end = 10.0;
  return bc;
}

std::vector<BenchmarkCase> build_registry() {
  std::vector<BenchmarkCase> cases;
  cases.push_back(make_breather_case(kBreatherVelocity));
  cases.push_back(line_perturbed());
  cases.push_back(line_inhomogeneous());
  cases.push_back(ring());
  cases.push_back(four_ring());
  return cases;
}

}  // namespace

double breather_kappa(double c) { return 1.0 / std::sqrt(1.0 + c * c); }

double breather_exact(double x, double t, double c) {
  if (c == 0.0 || !std::isfinite(c)) throw ArgumentError("breather velocity c must be nonzero");
  const double kappa = breather_kappa(c);
  return 4.0 * std::atan(std::sin(c * kappa * t) * sech(kappa * x) / c);
}

BenchmarkCase make_breather_case(double c) {
  if (c == 0.0 || !std::isfinite(c)) throw ArgumentError("breather velocity c must be nonzero");
  const double kappa = breather_kappa(c);
  BenchmarkCase bc;
  bc.name = "breather";
  bc.description = "1D breather u_tt - u_xx + sin u = 0 with exact solution";
  bc.problem.domain = {-20.0, 20.0, 0.0, 1.0};
  bc.problem.phi = [](double, double) { return 1.0; };
  bc.problem.init_u = [](double, double) { return 0.0; };
  bc.problem.init_v = [kappa](double x, double) { return 4.0 * kappa * sech(kappa * x); };
  bc.problem.exact = [c](double x, double, double t) { return breather_exact(x, t, c); };
  bc.default_nx = 128;
  bc.default_ny = 1;
  bc.default_tau = 0.01;
  bc.default_t_end = 10.0;
  if (c == kBreatherVelocity) {
    bc.reference_values = {
        {"pepm-mid l2 at t=10", 9.20e-6, "tau=1e-2, N=128"},
        {"pepm-mid linf at t=10", 6.70e-6, "tau=1e-2, N=128"},
        {"svm-mid l2 at t=10", 2.35e-5, "tau=1e-2, N=128"},
        {"svm-mid linf at t=10", 1.20e-5, "tau=1e-2, N=128"},
        {"pepm-regular l2 at t=10", 3.35e-5, "tau=1e-2, N=128"},
        {"pepm-regular linf at t=10", 1.57e-5, "tau=1e-2, N=128"},
        {"svm-regular l2 at t=10", 2.35e-5, "tau=1e-2, N=128"},
        {"svm-regular linf at t=10", 1.15e-5, "tau=1e-2, N=128"},
    };
  }
  return bc;
}

const std::vector<BenchmarkCase>& registry() {
  static const std::vector<BenchmarkCase> cases = build_registry();
  return cases;
}

const BenchmarkCase& find_case(const std::string& name) {
  for (const auto& bc : registry()) {
    if (bc.name == name) return bc;
  }
  throw ArgumentError("unknown benchmark case '" + name + "'");
}

ErrorNorms error_norms(const Field& numeric, const Function3D& exact, double t) {
  const GridPtr& grid = numeric.grid_ptr();
  const Field reference = sample([&](double x, double y) { return exact(x, y, t); }, grid);
  const Field diff = numeric - reference;
  return {norm(diff), diff.max_abs()};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ArgumentError("loglog_slope needs two equally long series of at least two points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceTable convergence_study(const BenchmarkCase& bench_case, const SchemeConfig& base,
                                   StudyAxis axis, const std::vector<double>& levels,
                                   const StudyOptions& options) {
  if (!bench_case.problem.exact) {
    throw UnsupportedCaseError("case '" + bench_case.name + "' has no exact solution");
  }
  const std::size_t count = levels.size();
  ConvergenceTable table;
  table.axis = axis;
  table.rows.resize(count);
  table.max_multiplier.assign(count, 0.0);
  std::vector<std::exception_ptr> failures(count);

  // Inner kernels run serially here; parallelism is across levels.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      SchemeConfig cfg = base;
      cfg.t_end = options.t_end;
      std::size_t nx = options.fixed_n;
      if (axis == StudyAxis::Time) {
        cfg.tau = levels[i];
      } else {
        cfg.tau = options.fixed_tau;
        nx = static_cast<std::size_t>(std::llround(levels[i]));
      }
      const RunResult r = run(bench_case.problem, cfg, nx, bench_case.default_ny, {}, Exec::Serial);
      const ErrorNorms e = error_norms(r.final_state.u, *bench_case.problem.exact, cfg.t_end);
      table.rows[i] = {levels[i], e.l2, e.linf, std::nullopt, std::nullopt};
      double m = 0.0;
      for (const auto& d : r.diagnostics) m = std::max(m, std::abs(d.multiplier));
      table.max_multiplier[i] = m;
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  for (std::size_t i = 1; i < count; ++i) {
    const auto& coarse = table.rows[i - 1];
    auto& fine = table.rows[i];
    // Order with respect to the mesh width: h ~ tau or h ~ 1/N.
    const double ratio = axis == StudyAxis::Time ? coarse.resolution / fine.resolution
                                                 : fine.resolution / coarse.resolution;
    fine.order_l2 = std::log(coarse.l2 / fine.l2) / std::log(ratio);
    fine.order_linf = std::log(coarse.linf / fine.linf) / std::log(ratio);
  }
  if (axis == StudyAxis::Space && count > 0) {
    table.spectral = std::max(table.rows.back().l2, table.rows.back().linf) < 1e-9;
  }
  return table;
}

}  // namespace sg
