#include "sg/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "sg/errors.hpp"

namespace sg {

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

double parse_number(const std::string& text, const std::string& path) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || errno == ERANGE) {
    throw IoError(path, "malformed number '" + text + "'");
  }
  return x;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_diagnostics(const std::vector<StepDiagnostics>& diags, const std::string& path,
                      std::optional<long> aborted_at) {
  auto out = open_for_write(path);
  out << "step,time,energy,energy_error,multiplier,newton_iters\n";
  for (const auto& d : diags) {
    out << d.step << ',' << format_double(d.time) << ',' << format_double(d.energy) << ','
        << format_double(d.energy_error) << ',' << format_double(d.multiplier) << ','
        << d.newton_iters << '\n';
  }
  if (aborted_at) out << "# aborted at step " << *aborted_at << '\n';
  finish(out, path);
}

std::vector<StepDiagnostics> read_diagnostics(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  std::string line;
  if (!std::getline(in, line) || line != "step,time,energy,energy_error,multiplier,newton_iters") {
    throw IoError(path, "missing diagnostics header");
  }
  std::vector<StepDiagnostics> diags;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto f = split(line, ',');
    if (f.size() != 6) throw IoError(path, "diagnostics row needs 6 columns");
    diags.push_back({std::stol(f[0]), parse_number(f[1], path), parse_number(f[2], path),
                     parse_number(f[3], path), parse_number(f[4], path), std::stoi(f[5])});
  }
  return diags;
}

void write_field_snapshot(const Field& field, double t, const std::string& path) {
  const GridSpec& g = field.grid();
  const Domain& dom = g.domain();
  auto out = open_for_write(path);
  out << "# t=" << format_double(t)
      << " family=" << (g.family() == GridFamily::MidPoint ? "mid" : "regular")
      << " nx=" << g.nx() << " ny=" << g.ny() << " a=" << format_double(dom.a)
      << " b=" << format_double(dom.b) << " c=" << format_double(dom.c)
      << " d=" << format_double(dom.d) << '\n';
  for (std::size_t j = 0; j < g.rows(); ++j) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      if (k > 0) out << ',';
      out << format_double(field(j, k));
    }
    out << '\n';
  }
  finish(out, path);
}

void emit_snapshot(const State& state, double t, const std::string& prefix) {
  write_field_snapshot(state.u, t, prefix + "_u.csv");
  write_field_snapshot(state.v, t, prefix + "_v.csv");
}

Snapshot read_field_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  std::string header;
  if (!std::getline(in, header) || header.rfind("# ", 0) != 0) {
    throw IoError(path, "missing snapshot header");
  }
  std::map<std::string, std::string> meta;
  for (const auto& token : split(header.substr(2), ' ')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw IoError(path, "malformed header token '" + token + "'");
    meta[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"t", "family", "nx", "ny", "a", "b", "c", "d"}) {
    if (!meta.contains(key)) throw IoError(path, std::string("header lacks ") + key);
  }
  GridFamily family;
  if (meta["family"] == "mid") {
    family = GridFamily::MidPoint;
  } else if (meta["family"] == "regular") {
    family = GridFamily::Regular;
  } else {
    throw IoError(path, "unknown family '" + meta["family"] + "'");
  }
  const Domain dom{parse_number(meta["a"], path), parse_number(meta["b"], path),
                   parse_number(meta["c"], path), parse_number(meta["d"], path)};
  const auto nx = static_cast<std::size_t>(std::stoul(meta["nx"]));
  const auto ny = static_cast<std::size_t>(std::stoul(meta["ny"]));
  GridPtr grid = make_grid(dom, family, nx, ny);

  std::vector<double> data;
  data.reserve(grid->size());
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != grid->cols()) throw IoError(path, "row has the wrong number of columns");
    for (const auto& c : cells) data.push_back(parse_number(c, path));
    ++rows;
  }
  if (rows != grid->rows()) throw IoError(path, "snapshot has the wrong number of rows");
  return {parse_number(meta["t"], path), Field(grid, std::move(data))};
}

std::string convergence_csv(const ConvergenceTable& table) {
  std::ostringstream out;
  out << "resolution,l2,linf,order_l2,order_linf\n";
  for (const auto& r : table.rows) {
    out << format_double(r.resolution) << ',' << format_double(r.l2) << ','
        << format_double(r.linf) << ',' << (r.order_l2 ? format_double(*r.order_l2) : "") << ','
        << (r.order_linf ? format_double(*r.order_linf) : "") << '\n';
  }
  return out.str();
}

}  // namespace sg
