// sgsolve: command-line driver for the energy-preserving sine-Gordon solvers.
//
//   sgsolve run --config run.json [--scheme svm --nx 64 ...]
//   sgsolve convergence --case breather --axis time --scheme pepm
//   sgsolve list-cases

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sg/bench.hpp"
#include "sg/config.hpp"
#include "sg/errors.hpp"
#include "sg/integrators.hpp"
#include "sg/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct RunFlags {
  std::string config_path;
  std::optional<std::string> case_name, scheme, grid, g, out_dir;
  std::optional<long long> nx, ny;
  std::optional<double> tau, t_end, tol;
  std::vector<double> snapshot_times;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sg::IoError(path, "cannot open config");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string merged_config(const RunFlags& f) {
  nlohmann::json doc = nlohmann::json::object();
  if (!f.config_path.empty()) {
    try {
      doc = nlohmann::json::parse(read_file(f.config_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw sg::ConfigError("(document)", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw sg::ConfigError("(document)", "expected a JSON object");
  }
  if (f.case_name) doc["case"] = *f.case_name;
  if (f.scheme) doc["scheme"] = *f.scheme;
  if (f.grid) doc["grid"] = *f.grid;
  if (f.g) doc["g"] = *f.g;
  if (f.out_dir) doc["out_dir"] = *f.out_dir;
  if (f.nx) doc["nx"] = *f.nx;
  if (f.ny) doc["ny"] = *f.ny;
  if (f.tau) doc["tau"] = *f.tau;
  if (f.t_end) doc["t_end"] = *f.t_end;
  if (f.tol) doc["tol"] = *f.tol;
  if (!f.snapshot_times.empty()) doc["snapshot_times"] = f.snapshot_times;
  return doc.dump();
}

std::string snapshot_prefix(const std::string& dir, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_t%g", t);
  return (std::filesystem::path(dir) / buf).string();
}

int do_run(const RunFlags& flags) {
  const sg::RunConfig cfg = sg::parse_config(merged_config(flags));
  const sg::BenchmarkCase bc = sg::resolve_case(cfg.case_spec);
  const sg::SchemeConfig scheme = sg::scheme_config(cfg, bc);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw sg::IoError(cfg.out_dir, ec.message());
  const std::string diag_path = (std::filesystem::path(cfg.out_dir) / "diagnostics.csv").string();

  std::vector<bool> written(cfg.snapshot_times.size(), false);
  auto observer = [&](const sg::StepDiagnostics& d, const sg::State& state) {
    for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
      if (!written[i] && std::abs(d.time - cfg.snapshot_times[i]) <= 0.5 * scheme.tau * (1 + 1e-9)) {
        sg::emit_snapshot(state, d.time, snapshot_prefix(cfg.out_dir, cfg.snapshot_times[i]));
        written[i] = true;
      }
    }
  };

  std::optional<sg::RunResult> result;
  try {
    result = sg::run(bc.problem, scheme, sg::effective_nx(cfg, bc), sg::effective_ny(cfg, bc),
                     observer);
  } catch (const sg::RunAborted& e) {
    sg::emit_diagnostics(e.diagnostics(), diag_path, e.step());
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitNumeric;
  }
  sg::emit_diagnostics(result->diagnostics, diag_path);

  double max_err = 0.0, max_mult = 0.0;
  for (const auto& d : result->diagnostics) {
    max_err = std::max(max_err, d.energy_error);
    max_mult = std::max(max_mult, std::abs(d.multiplier));
  }
  std::cout << "case=" << bc.name << " scheme=" << sg::to_string(scheme.scheme)
            << " grid=" << sg::to_string(scheme.grid_family) << " steps=" << scheme.steps()
            << "\nH0=" << sg::format_double(result->h0)
            << " max_energy_error=" << sg::format_double(max_err)
            << " max_abs_multiplier=" << sg::format_double(max_mult) << '\n';
  if (bc.problem.exact) {
    const auto e = sg::error_norms(result->final_state.u, *bc.problem.exact, scheme.t_end);
    std::cout << "l2=" << sg::format_double(e.l2) << " linf=" << sg::format_double(e.linf) << '\n';
  }
  for (std::size_t i = 0; i < written.size(); ++i) {
    if (!written[i]) {
      std::cerr << "sgsolve: no step near requested snapshot time " << cfg.snapshot_times[i]
                << '\n';
    }
  }
  std::cout << "diagnostics: " << diag_path << '\n';
  return kExitOk;
}

struct ConvergenceFlags {
  std::string case_name = "breather";
  std::string axis = "time";
  std::string scheme = "pepm";
  std::string grid = "mid";
  std::string g = "g1";
  double tol = 1e-14;
  std::vector<double> levels;
  long long n = 256;
  double tau = 1e-4;
  double t_end = 1.0;
  std::string out;
};

int do_convergence(const ConvergenceFlags& f) {
  sg::SchemeConfig base;
  sg::StudyAxis axis;
  try {
    base.scheme = sg::parse_scheme(f.scheme);
    base.grid_family = sg::parse_family(f.grid);
    base.g_choice = sg::parse_g(f.g);
  } catch (const sg::ArgumentError& e) {
    throw sg::ConfigError("convergence", e.what());
  }
  if (f.axis == "time") {
    axis = sg::StudyAxis::Time;
  } else if (f.axis == "space") {
    axis = sg::StudyAxis::Space;
  } else {
    throw sg::ConfigError("axis", "expected time or space");
  }
  base.newton_tol = f.tol;
  std::vector<double> levels = f.levels;
  if (levels.empty()) {
    levels = axis == sg::StudyAxis::Time ? std::vector<double>{0.1, 0.05, 0.025, 0.0125}
                                         : std::vector<double>{16, 32, 64, 128, 256};
  }
  if (f.n < 1) throw sg::ConfigError("n", "must be at least 1");
  const sg::StudyOptions opts{static_cast<std::size_t>(f.n), f.tau, f.t_end};

  const auto table = sg::convergence_study(sg::find_case(f.case_name), base, axis, levels, opts);
  const std::string csv = sg::convergence_csv(table);
  if (f.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(f.out);
    if (!out) throw sg::IoError(f.out, "cannot open for writing");
    out << csv;
    if (!out) throw sg::IoError(f.out, "write failed");
  }
  if (axis == sg::StudyAxis::Space) {
    std::cerr << "spectral=" << (table.spectral ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int do_list_cases() {
  for (const auto& bc : sg::registry()) {
    const auto& d = bc.problem.domain;
    std::cout << bc.name << "\t[" << d.a << "," << d.b << "]x[" << d.c << "," << d.d << "]"
              << "\tnx=" << bc.default_nx << " ny=" << bc.default_ny << " tau=" << bc.default_tau
              << " t_end=" << bc.default_t_end << (bc.problem.exact ? "\texact" : "") << "\t"
              << bc.description << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-preserving cosine pseudo-spectral sine-Gordon solver"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "run a single simulation");
  run->add_option("--config", run_flags.config_path, "JSON run configuration");
  run->add_option("--case", run_flags.case_name, "benchmark case name");
  run->add_option("--scheme", run_flags.scheme, "pepm | svm | baseline");
  run->add_option("--grid", run_flags.grid, "mid | regular");
  run->add_option("--g", run_flags.g, "g1 | g2 (svm only)");
  run->add_option("--nx", run_flags.nx);
  run->add_option("--ny", run_flags.ny);
  run->add_option("--tau", run_flags.tau);
  run->add_option("--t_end", run_flags.t_end);
  run->add_option("--tol", run_flags.tol, "Newton tolerance (relative to max(1,|H0|))");
  run->add_option("--snapshot_times", run_flags.snapshot_times);
  run->add_option("--out_dir", run_flags.out_dir);

  ConvergenceFlags conv_flags;
  auto* conv = app.add_subcommand("convergence", "mesh-refinement study against an exact solution");
  conv->add_option("--case", conv_flags.case_name);
  conv->add_option("--axis", conv_flags.axis, "time | space");
  conv->add_option("--scheme", conv_flags.scheme);
  conv->add_option("--grid", conv_flags.grid);
  conv->add_option("--g", conv_flags.g);
  conv->add_option("--tol", conv_flags.tol);
  conv->add_option("--levels", conv_flags.levels, "step sizes (time) or N values (space)");
  conv->add_option("--n", conv_flags.n, "fixed N for the time axis");
  conv->add_option("--tau", conv_flags.tau, "fixed step for the space axis");
  conv->add_option("--t_end", conv_flags.t_end);
  conv->add_option("--out", conv_flags.out, "CSV output path (default stdout)");

  app.add_subcommand("list-cases", "list the benchmark registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) return do_run(run_flags);
    if (conv->parsed()) return do_convergence(conv_flags);
    return do_list_cases();
  } catch (const sg::ConfigError& e) {
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sg::IoError& e) {
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitIo;
  } catch (const sg::ArgumentError& e) {
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sg::UnsupportedCaseError& e) {
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitConfig;
  } catch (const sg::Error& e) {
    std::cerr << "sgsolve: " << e.what() << '\n';
    return kExitNumeric;
  }
}
