#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// sg::kernels::serial and an OpenMP version in sg::kernels::omp; the
// dispatchers below pick one by execution policy.

#include <cmath>
#include <cstddef>
#include <span>

#include "sg/transform.hpp"

namespace sg {

enum class Exec { Serial, Parallel };

namespace kernels {

enum class Direction { Forward, Inverse };

/// Weighted sums making up the discrete energy.
struct EnergyTerms {
  double kinetic = 0.0;    // 1/2 sum w v^2
  double gradient = 0.0;   // -1/2 sum w u (Lap u)
  double potential = 0.0;  // sum w phi (1 - cos u)
  double total() const { return kinetic + gradient + potential; }
};

/// Neumaier-compensated running sum. The energy closure needs the total to
/// ~1e-14 relative, which naive summation over 1e4+ terms does not deliver.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

namespace serial {
void transform_rows(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir);
void transform_cols(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir);
void scale_outer(std::span<double> data, std::span<const double> row_factor,
                 std::span<const double> col_factor, bool divide);
void multiply(std::span<double> data, std::span<const double> factor);
void phi_sin(std::span<const double> phi, std::span<const double> u, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
EnergyTerms energy_terms(std::span<const double> w, std::span<const double> u,
                         std::span<const double> v, std::span<const double> lap_u,
                         std::span<const double> phi);
double energy_slope(std::span<const double> w, std::span<const double> u,
                    std::span<const double> v, std::span<const double> lap_u,
                    std::span<const double> phi, std::span<const double> du,
                    std::span<const double> dv);
}  // namespace serial

namespace omp {
void transform_rows(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir);
void transform_cols(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir);
void scale_outer(std::span<double> data, std::span<const double> row_factor,
                 std::span<const double> col_factor, bool divide);
void multiply(std::span<double> data, std::span<const double> factor);
void phi_sin(std::span<const double> phi, std::span<const double> u, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
EnergyTerms energy_terms(std::span<const double> w, std::span<const double> u,
                         std::span<const double> v, std::span<const double> lap_u,
                         std::span<const double> phi);
double energy_slope(std::span<const double> w, std::span<const double> u,
                    std::span<const double> v, std::span<const double> lap_u,
                    std::span<const double> phi, std::span<const double> du,
                    std::span<const double> dv);
}  // namespace omp

// Row-major data of shape rows x cols. Rows are x-indices, columns y-indices.

/// Transform every row (a y-slice) of length cols.
inline void transform_rows(Exec e, std::span<double> data, std::size_t rows, std::size_t cols,
                           const TransformPlan& plan, Direction dir) {
  e == Exec::Parallel ? omp::transform_rows(data, rows, cols, plan, dir)
                      : serial::transform_rows(data, rows, cols, plan, dir);
}

/// Transform every column (an x-slice) of length rows.
inline void transform_cols(Exec e, std::span<double> data, std::size_t rows, std::size_t cols,
                           const TransformPlan& plan, Direction dir) {
  e == Exec::Parallel ? omp::transform_cols(data, rows, cols, plan, dir)
                      : serial::transform_cols(data, rows, cols, plan, dir);
}

/// data(j,k) *= r[j] c[k], or /= when divide is set.
inline void scale_outer(Exec e, std::span<double> data, std::span<const double> row_factor,
                        std::span<const double> col_factor, bool divide) {
  e == Exec::Parallel ? omp::scale_outer(data, row_factor, col_factor, divide)
                      : serial::scale_outer(data, row_factor, col_factor, divide);
}

inline void multiply(Exec e, std::span<double> data, std::span<const double> factor) {
  e == Exec::Parallel ? omp::multiply(data, factor) : serial::multiply(data, factor);
}

/// out = phi * sin(u)
inline void phi_sin(Exec e, std::span<const double> phi, std::span<const double> u,
                    std::span<double> out) {
  e == Exec::Parallel ? omp::phi_sin(phi, u, out) : serial::phi_sin(phi, u, out);
}

inline double weighted_dot(Exec e, std::span<const double> w, std::span<const double> a,
                           std::span<const double> b) {
  return e == Exec::Parallel ? omp::weighted_dot(w, a, b) : serial::weighted_dot(w, a, b);
}

inline EnergyTerms energy_terms(Exec e, std::span<const double> w, std::span<const double> u,
                                std::span<const double> v, std::span<const double> lap_u,
                                std::span<const double> phi) {
  return e == Exec::Parallel ? omp::energy_terms(w, u, v, lap_u, phi)
                             : serial::energy_terms(w, u, v, lap_u, phi);
}

/// sum w [(-Lap u + phi sin u) du + v dv], the derivative of the energy along
/// the direction (du, dv).
inline double energy_slope(Exec e, std::span<const double> w, std::span<const double> u,
                           std::span<const double> v, std::span<const double> lap_u,
                           std::span<const double> phi, std::span<const double> du,
                           std::span<const double> dv) {
  return e == Exec::Parallel ? omp::energy_slope(w, u, v, lap_u, phi, du, dv)
                             : serial::energy_slope(w, u, v, lap_u, phi, du, dv);
}

}  // namespace kernels
}  // namespace sg
