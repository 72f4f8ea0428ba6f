#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sg/grid.hpp"

namespace sg::test {

inline std::vector<double> random_vector(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                         double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

inline Field random_field(const GridPtr& grid, std::uint64_t seed, double lo = -1.0,
                          double hi = 1.0) {
  return Field(grid, random_vector(grid->size(), seed, lo, hi));
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

/// Smooth, non-symmetric field with content in many cosine modes.
inline Field smooth_field(const GridPtr& grid, double shift = 0.0) {
  return sample(
      [shift](double x, double y) {
        return std::exp(-0.3 * (x - shift) * (x - shift)) * std::cos(0.7 * y) + 0.1 * x * x;
      },
      grid);
}

inline GridFamily other(GridFamily f) {
  return f == GridFamily::MidPoint ? GridFamily::Regular : GridFamily::MidPoint;
}

}  // namespace sg::test
