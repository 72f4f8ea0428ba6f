#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/bench.hpp"
#include "sg/integrators.hpp"

namespace sg {

/// Benchmark preset, optionally with its domain or breather velocity replaced.
struct CaseSpec {
  std::string preset;
  std::optional<Domain> domain;
  std::optional<double> breather_c;
};

struct RunConfig {
  CaseSpec case_spec;
  Scheme scheme = Scheme::Pepm;
  GridFamily grid = GridFamily::MidPoint;
  GChoice g = GChoice::G1;
  std::optional<std::size_t> nx;  // defaults come from the case
  std::optional<std::size_t> ny;
  std::optional<double> tau;
  std::optional<double> t_end;
  double tol = 1e-14;
  std::vector<double> snapshot_times;
  std::string out_dir = ".";
};

/// Parses a JSON object whose snake_case keys are the RunConfig fields:
/// case, scheme, grid, g, nx, ny, tau, t_end, tol, snapshot_times, out_dir.
/// `case` and `scheme` are required. `case` is a preset name or an object
/// {"preset": name, "domain": [a,b,c,d], "c": velocity}.
///
/// Throws ConfigError naming the offending key.
RunConfig parse_config(const std::string& source);

/// The benchmark case with any inline overrides applied.
BenchmarkCase resolve_case(const CaseSpec& spec);

/// Scheme settings with case defaults substituted for omitted values.
SchemeConfig scheme_config(const RunConfig& cfg, const BenchmarkCase& resolved);
std::size_t effective_nx(const RunConfig& cfg, const BenchmarkCase& resolved);
std::size_t effective_ny(const RunConfig& cfg, const BenchmarkCase& resolved);

Scheme parse_scheme(const std::string& s);
GridFamily parse_family(const std::string& s);
GChoice parse_g(const std::string& s);
std::string to_string(Scheme s);
std::string to_string(GridFamily f);
std::string to_string(GChoice g);

}  // namespace sg
