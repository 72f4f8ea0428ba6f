#include "sg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sg/errors.hpp"

namespace sg {

namespace {

std::vector<double> axis_nodes(GridFamily family, double lo, double h, std::size_t cells) {
  std::vector<double> nodes;
  if (family == GridFamily::MidPoint) {
    nodes.resize(cells);
    for (std::size_t j = 0; j < cells; ++j) nodes[j] = lo + (static_cast<double>(j) + 0.5) * h;
  } else {
    nodes.resize(cells + 1);
    for (std::size_t j = 0; j <= cells; ++j) nodes[j] = lo + static_cast<double>(j) * h;
  }
  return nodes;
}

// a_j on the regular grid: 2 at both ends, 1 inside.
double end_factor(std::size_t j, std::size_t cells) { return (j == 0 || j == cells) ? 2.0 : 1.0; }

void check_domain(const Domain& d) {
  if (!(d.b > d.a) || !(d.d > d.c) || !std::isfinite(d.area())) {
    throw ArgumentError("domain must satisfy b > a and d > c");
  }
}

}  // namespace

GridSpec::GridSpec(Domain domain, GridFamily family, std::size_t nx, std::size_t ny, Exec exec)
    : domain_((check_domain(domain), domain)),
      family_(family),
      nx_(nx),
      ny_(ny),
      hx_(domain.width() / static_cast<double>(nx)),
      hy_(domain.height() / static_cast<double>(ny)),
      nodes_x_(axis_nodes(family, domain.a, hx_, nx)),
      nodes_y_(axis_nodes(family, domain.c, hy_, ny)),
      plan_x_(family, nx, domain.width()),
      plan_y_(family, ny, domain.height()),
      exec_(exec) {
  const std::size_t r = rows();
  const std::size_t c = cols();
  weights_.resize(r * c);
  symbol_.resize(r * c);
  const double cell = hx_ * hy_;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < c; ++k) {
      weights_[j * c + k] = family == GridFamily::MidPoint
                                ? cell
                                : cell / (end_factor(j, nx) * end_factor(k, ny));
      symbol_[j * c + k] = plan_x_.eigenvalues()[j] + plan_y_.eigenvalues()[k];
    }
  }
}

bool GridSpec::same_layout(const GridSpec& other) const {
  return this == &other || (family_ == other.family_ && nx_ == other.nx_ && ny_ == other.ny_ &&
                            domain_ == other.domain_);
}

GridPtr make_grid(const Domain& domain, GridFamily family, std::size_t nx, std::size_t ny,
                  Exec exec) {
  if (nx < 1 || ny < 1) throw ArgumentError("grid resolution must be at least 1 along each axis");
  return std::make_shared<const GridSpec>(domain, family, nx, ny, exec);
}

Field::Field(GridPtr grid) : Field(std::move(grid), 0.0) {}

Field::Field(GridPtr grid, double value) : grid_(std::move(grid)) {
  if (!grid_) throw ArgumentError("field needs a grid");
  data_.assign(grid_->size(), value);
}

Field::Field(GridPtr grid, std::vector<double> data) : grid_(std::move(grid)), data_(std::move(data)) {
  if (!grid_) throw ArgumentError("field needs a grid");
  if (data_.size() != grid_->size()) {
    throw DimensionError("field data has " + std::to_string(data_.size()) + " entries, grid has " +
                         std::to_string(grid_->size()) + " nodes");
  }
}

void require_same_grid(const Field& lhs, const Field& rhs, const char* where) {
  if (!lhs.grid().same_layout(rhs.grid())) {
    throw GridMismatchError(std::string(where) + ": fields live on different grids");
  }
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(*this, other, "Field::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(*this, other, "Field::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Field& Field::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Field& Field::axpy(double s, const Field& other) {
  require_same_grid(*this, other, "Field::axpy");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * other.data_[i];
  return *this;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool Field::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

Field operator+(Field lhs, const Field& rhs) { return lhs += rhs; }
Field operator-(Field lhs, const Field& rhs) { return lhs -= rhs; }
Field operator*(double s, Field f) { return f *= s; }
Field operator*(Field f, double s) { return f *= s; }

double inner(const Field& u, const Field& w) {
  require_same_grid(u, w, "inner");
  return kernels::weighted_dot(u.grid().exec(), u.grid().weights(), u.values(), w.values());
}

double norm(const Field& u) { return std::sqrt(inner(u, u)); }

Field sample(const Function2D& f, const GridPtr& grid) {
  Field out(grid);
  const auto& xs = grid->nodes_x();
  const auto& ys = grid->nodes_y();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t k = 0; k < ys.size(); ++k) {
      const double value = f(xs[j], ys[k]);
      if (!std::isfinite(value)) {
        throw SamplingError("non-finite sample at node (" + std::to_string(j) + ", " +
                                std::to_string(k) + ")",
                            j, k);
      }
      out(j, k) = value;
    }
  }
  return out;
}

}  // namespace sg
