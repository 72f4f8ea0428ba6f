#pragma once

// Dense-matrix oracles built straight from the interpolation basis. O(N^2)
// or worse; used by tests and the benchmark only.

#include <cstddef>
#include <vector>

#include "sg/grid.hpp"

namespace sg::reference {

/// Row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  std::vector<double> apply(const std::vector<double>& x) const;
  DenseMatrix transpose() const;
};

/// C from the closed-form entries: DCT-3 of size N for MidPoint,
/// DCT-1 of size N+1 for Regular.
DenseMatrix cosine_matrix(GridFamily family, std::size_t cells);

enum class Axis { X, Y };

/// Second-derivative matrix (D2)_{j,m} = X_m''(x_j), obtained by
/// differentiating the cosine interpolation basis twice. Axis length <= 64.
DenseMatrix dense_diff_matrix(const GridSpec& grid, Axis axis);

/// D2x u + u D2y^T with the dense matrices.
Field dense_laplacian(const Field& u);

}  // namespace sg::reference
