#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/bench.hpp"
#include "sg/grid.hpp"
#include "sg/integrators.hpp"

namespace sg {

/// Shortest round-trip text for a double (17 significant digits).
std::string format_double(double x);

/// CSV with header step,time,energy,energy_error,multiplier,newton_iters.
/// When aborted_at is set a trailing "# aborted at step <n>" line is added.
void emit_diagnostics(const std::vector<StepDiagnostics>& diags, const std::string& path,
                      std::optional<long> aborted_at = std::nullopt);
std::vector<StepDiagnostics> read_diagnostics(const std::string& path);

/// Writes `<prefix>_u.csv` and `<prefix>_v.csv` in the field snapshot format.
void emit_snapshot(const State& state, double t, const std::string& prefix);

/// One field: header line
///   # t=<time> family=<mid|regular> nx=<Nx> ny=<Ny> a=<a> b=<b> c=<c> d=<d>
/// followed by one comma separated row per x index.
void write_field_snapshot(const Field& field, double t, const std::string& path);

struct Snapshot {
  double t;
  Field field;
};
/// Reads a snapshot back onto a freshly built grid.
Snapshot read_field_snapshot(const std::string& path);

/// Convergence table CSV: resolution,l2,linf,order_l2,order_linf (orders
/// empty on the first row).
std::string convergence_csv(const ConvergenceTable& table);

}  // namespace sg
