#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "sg/kernels.hpp"

namespace sg::kernels::omp {

namespace {

void run(const TransformPlan& plan, std::span<double> slice, Direction dir) {
  dir == Direction::Forward ? plan.forward_inplace(slice) : plan.inverse_inplace(slice);
}

using Index = std::int64_t;

// Per-thread compensated partials merged in thread order, so a given thread
// count always reproduces the same bits.
template <std::size_t K, class Body>
std::array<double, K> reduce(Index n, Body body) {
  std::vector<std::array<CompensatedSum, K>> partial;
#pragma omp parallel if (n > 1)
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (Index i = 0; i < n; ++i) body(i, mine);
  }
  std::array<CompensatedSum, K> total{};
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < K; ++k) total[k].add(p[k]);
  }
  std::array<double, K> out{};
  for (std::size_t k = 0; k < K; ++k) out[k] = total[k].value();
  return out;
}

}  // namespace

void transform_rows(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir) {
  const Index n = static_cast<Index>(rows);
#pragma omp parallel for schedule(static) if (n > 1)
  for (Index j = 0; j < n; ++j) run(plan, data.subspan(static_cast<std::size_t>(j) * cols, cols), dir);
}

void transform_cols(std::span<double> data, std::size_t rows, std::size_t cols,
                    const TransformPlan& plan, Direction dir) {
  const Index n = static_cast<Index>(cols);
#pragma omp parallel if (n > 1)
  {
    std::vector<double> column(rows);
#pragma omp for schedule(static)
    for (Index kk = 0; kk < n; ++kk) {
      const auto k = static_cast<std::size_t>(kk);
      for (std::size_t j = 0; j < rows; ++j) column[j] = data[j * cols + k];
      run(plan, column, dir);
      for (std::size_t j = 0; j < rows; ++j) data[j * cols + k] = column[j];
    }
  }
}

void scale_outer(std::span<double> data, std::span<const double> row_factor,
                 std::span<const double> col_factor, bool divide) {
  const std::size_t cols = col_factor.size();
  const Index rows = static_cast<Index>(row_factor.size());
#pragma omp parallel for schedule(static)
  for (Index jj = 0; jj < rows; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    for (std::size_t k = 0; k < cols; ++k) {
      const double f = row_factor[j] * col_factor[k];
      data[j * cols + k] = divide ? data[j * cols + k] / f : data[j * cols + k] * f;
    }
  }
}

void multiply(std::span<double> data, std::span<const double> factor) {
  const Index n = static_cast<Index>(data.size());
#pragma omp parallel for simd schedule(static)
  for (Index i = 0; i < n; ++i) data[i] *= factor[i];
}

void phi_sin(std::span<const double> phi, std::span<const double> u, std::span<double> out) {
  const Index n = static_cast<Index>(u.size());
#pragma omp parallel for schedule(static)
  for (Index i = 0; i < n; ++i) out[i] = phi[i] * std::sin(u[i]);
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  return reduce<1>(static_cast<Index>(w.size()), [&](Index i, auto& acc) {
    acc[0].add(w[i] * a[i] * b[i]);
  })[0];
}

EnergyTerms energy_terms(std::span<const double> w, std::span<const double> u,
                         std::span<const double> v, std::span<const double> lap_u,
                         std::span<const double> phi) {
  const auto t = reduce<3>(static_cast<Index>(w.size()), [&](Index i, auto& acc) {
    const double s = std::sin(0.5 * u[i]);
    acc[0].add(w[i] * v[i] * v[i]);
    acc[1].add(-w[i] * u[i] * lap_u[i]);
    acc[2].add(w[i] * phi[i] * 2.0 * s * s);
  });
  return {0.5 * t[0], 0.5 * t[1], t[2]};
}

double energy_slope(std::span<const double> w, std::span<const double> u,
                    std::span<const double> v, std::span<const double> lap_u,
                    std::span<const double> phi, std::span<const double> du,
                    std::span<const double> dv) {
  return reduce<1>(static_cast<Index>(w.size()), [&](Index i, auto& acc) {
    acc[0].add(w[i] * ((phi[i] * std::sin(u[i]) - lap_u[i]) * du[i] + v[i] * dv[i]));
  })[0];
}

}  // namespace sg::kernels::omp
