#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "sg/kernels.hpp"
#include "sg/transform.hpp"

namespace sg {

/// Rectangle [a,b] x [c,d].
struct Domain {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double d = 1.0;

  double width() const { return b - a; }
  double height() const { return d - c; }
  double area() const { return width() * height(); }
  bool operator==(const Domain&) const = default;
};

/// Uniform grid over a Domain, either cell centred (MidPoint) or vertex based
/// (Regular), together with its quadrature weights and cached transform plans.
///
/// Construct through make_grid; a GridSpec is immutable and shared between all
/// fields that live on it.
class GridSpec {
 public:
  GridSpec(Domain domain, GridFamily family, std::size_t nx, std::size_t ny, Exec exec);

  const Domain& domain() const { return domain_; }
  GridFamily family() const { return family_; }
  /// Number of cells along each axis (N_x, N_y).
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  /// Number of nodes along each axis: N for MidPoint, N+1 for Regular.
  std::size_t rows() const { return nodes_x_.size(); }
  std::size_t cols() const { return nodes_y_.size(); }
  std::size_t size() const { return rows() * cols(); }

  const std::vector<double>& nodes_x() const { return nodes_x_; }
  const std::vector<double>& nodes_y() const { return nodes_y_; }
  /// Per-node quadrature weight, row-major.
  const std::vector<double>& weights() const { return weights_; }

  const TransformPlan& plan_x() const { return plan_x_; }
  const TransformPlan& plan_y() const { return plan_y_; }
  /// lambda_x[j] + lambda_y[k]: eigenvalues of the Laplacian in mode space, row-major.
  const std::vector<double>& laplacian_symbol() const { return symbol_; }

  Exec exec() const { return exec_; }

  /// Same geometry and family. The execution policy does not take part.
  bool same_layout(const GridSpec& other) const;

 private:
  Domain domain_;
  GridFamily family_;
  std::size_t nx_;
  std::size_t ny_;
  double hx_;
  double hy_;
  std::vector<double> nodes_x_;
  std::vector<double> nodes_y_;
  std::vector<double> weights_;
  TransformPlan plan_x_;
  TransformPlan plan_y_;
  std::vector<double> symbol_;
  Exec exec_;
};

using GridPtr = std::shared_ptr<const GridSpec>;

GridPtr make_grid(const Domain& domain, GridFamily family, std::size_t nx, std::size_t ny,
                  Exec exec = Exec::Parallel);

/// Real grid function, stored row-major with row index = x index.
class Field {
 public:
  explicit Field(GridPtr grid);
  Field(GridPtr grid, std::vector<double> data);
  Field(GridPtr grid, double value);

  const GridSpec& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  std::size_t rows() const { return grid_->rows(); }
  std::size_t cols() const { return grid_->cols(); }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t j, std::size_t k) { return data_[j * cols() + k]; }
  double operator()(std::size_t j, std::size_t k) const { return data_[j * cols() + k]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }
  const std::vector<double>& data() const { return data_; }

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double s);
  /// this += s * other
  Field& axpy(double s, const Field& other);

  double max_abs() const;
  bool all_finite() const;

 private:
  GridPtr grid_;
  std::vector<double> data_;
};

Field operator+(Field lhs, const Field& rhs);
Field operator-(Field lhs, const Field& rhs);
Field operator*(double s, Field f);
Field operator*(Field f, double s);

/// Phase-space point (u, v).
struct State {
  Field u;
  Field v;
};

/// Throws GridMismatchError unless both fields are laid out on the same grid.
void require_same_grid(const Field& lhs, const Field& rhs, const char* where);

/// (u,w)_h on MidPoint grids; <u,w>_T on Regular grids.
double inner(const Field& u, const Field& w);
double norm(const Field& u);

using Function2D = std::function<double(double x, double y)>;

/// Pointwise evaluation at the grid nodes.
Field sample(const Function2D& f, const GridPtr& grid);

}  // namespace sg
