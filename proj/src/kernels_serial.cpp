// Serial reference kernels. Kept deliberately plain; the OpenMP versions in
// kernels_omp.cpp are tested against these.

#include <cmath>
#include <vector>

#include "sg/kernels.hpp"

namespace sg::kernels::serial {

namespace {

void run(const TransformPlan& plan, std::span<double> slice, Direction dir) {
  dir == Direction::Forward ? plan.forward_inplace(slice) : plan.inverse_inplace(slice);
}

}  // namespace

void transform_rows(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir) {
  for (std::size_t j = 0; j < rows; ++j) run(plan, data.subspan(j * cols, cols), dir);
}

void transform_cols(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir) {
  std::vector<double> column(rows);
  for (std::size_t k = 0; k < cols; ++k) {
    for (std::size_t j = 0; j < rows; ++j) column[j] = data[j * cols + k];
    run(plan, column, dir);
    for (std::size_t j = 0; j < rows; ++j) data[j * cols + k] = column[j];
  }
}

void scale_outer(std::span<double> data, std::span<const double> row_factor,
                 std::span<const double> col_factor, bool divide) {
  const std::size_t cols = col_factor.size();
  for (std::size_t j = 0; j < row_factor.size(); ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      const double f = row_factor[j] * col_factor[k];
      data[j * cols + k] = divide ? data[j * cols + k] / f : data[j * cols + k] * f;
    }
  }
}

void multiply(std::span<double> data, std::span<const double> factor) {
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= factor[i];
}

void phi_sin(std::span<const double> phi, std::span<const double> u, std::span<double> out) {
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = phi[i] * std::sin(u[i]);
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  CompensatedSum s;
  for (std::size_t i = 0; i < w.size(); ++i) s.add(w[i] * a[i] * b[i]);
  return s.value();
}

EnergyTerms energy_terms(std::span<const double> w, std::span<const double> u,
                         std::span<const double> v, std::span<const double> lap_u,
                         std::span<const double> phi) {
  CompensatedSum kinetic, gradient, potential;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double s = std::sin(0.5 * u[i]);
    kinetic.add(w[i] * v[i] * v[i]);
    gradient.add(-w[i] * u[i] * lap_u[i]);
    // 1 - cos u = 2 sin^2(u/2), without the cancellation near u = 0.
    potential.add(w[i] * phi[i] * 2.0 * s * s);
  }
  return {0.5 * kinetic.value(), 0.5 * gradient.value(), potential.value()};
}

double energy_slope(std::span<const double> w, std::span<const double> u,
                    std::span<const double> v, std::span<const double> lap_u,
                    std::span<const double> phi, std::span<const double> du,
                    std::span<const double> dv) {
  CompensatedSum s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s.add(w[i] * ((phi[i] * std::sin(u[i]) - lap_u[i]) * du[i] + v[i] * dv[i]));
  }
  return s.value();
}

}  // namespace sg::kernels::serial
