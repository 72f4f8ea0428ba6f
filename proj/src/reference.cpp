#include "sg/reference.hpp"

#include <cmath>
#include <numbers>

#include "sg/errors.hpp"

namespace sg::reference {

std::vector<double> DenseMatrix::apply(const std::vector<double>& x) const {
  if (x.size() != n) throw DimensionError("DenseMatrix::apply: size mismatch");
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t{n, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

DenseMatrix cosine_matrix(GridFamily family, std::size_t cells) {
  const double pi = std::numbers::pi;
  const double n = static_cast<double>(cells);
  if (family == GridFamily::MidPoint) {
    DenseMatrix c{cells, std::vector<double>(cells * cells)};
    for (std::size_t j = 0; j < cells; ++j) {
      for (std::size_t m = 0; m < cells; ++m) {
        const double a_m = m == 0 ? 2.0 : 1.0;
        c(j, m) = std::sqrt(2.0 / (n * a_m)) *
                  std::cos(static_cast<double>(m) * (static_cast<double>(j) + 0.5) * pi / n);
      }
    }
    return c;
  }
  const std::size_t len = cells + 1;
  DenseMatrix c{len, std::vector<double>(len * len)};
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t m = 0; m < len; ++m) {
      const double a_j = (j == 0 || j == cells) ? 2.0 : 1.0;
      const double a_m = (m == 0 || m == cells) ? 2.0 : 1.0;
      c(j, m) = std::sqrt(2.0 / (n * a_j * a_m)) *
                std::cos(static_cast<double>(j) * static_cast<double>(m) * pi / n);
    }
  }
  return c;
}

DenseMatrix dense_diff_matrix(const GridSpec& grid, Axis axis) {
  const bool along_x = axis == Axis::X;
  const std::size_t cells = along_x ? grid.nx() : grid.ny();
  const auto& nodes = along_x ? grid.nodes_x() : grid.nodes_y();
  const double lo = along_x ? grid.domain().a : grid.domain().c;
  const double extent = along_x ? grid.domain().width() : grid.domain().height();
  const std::size_t len = nodes.size();
  if (len > 64) throw ArgumentError("dense_diff_matrix: axis longer than 64 nodes");

  const double mu = std::numbers::pi / extent;
  const double n = static_cast<double>(cells);
  const bool regular = grid.family() == GridFamily::Regular;
  auto weight = [&](std::size_t p) {
    if (regular) return (p == 0 || p == cells) ? 2.0 : 1.0;
    return p == 0 ? 2.0 : 1.0;
  };

  // X_m(x) = (2/N) sum_p cos(p mu (x_m - lo)) cos(p mu (x - lo)) / (a_p [a_m]),
  // the bracketed factor present on the regular grid only.
  DenseMatrix d{len, std::vector<double>(len * len, 0.0)};
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t m = 0; m < len; ++m) {
      double s = 0.0;
      for (std::size_t p = 0; p < len; ++p) {
        const double k = static_cast<double>(p) * mu;
        s += -(k * k) / weight(p) * std::cos(k * (nodes[m] - lo)) * std::cos(k * (nodes[j] - lo));
      }
      if (regular) s /= weight(m);
      d(j, m) = 2.0 / n * s;
    }
  }
  return d;
}

Field dense_laplacian(const Field& u) {
  const GridSpec& g = u.grid();
  const DenseMatrix dx = dense_diff_matrix(g, Axis::X);
  const DenseMatrix dy = dense_diff_matrix(g, Axis::Y);
  Field out(u.grid_ptr());
  for (std::size_t j = 0; j < g.rows(); ++j) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      double s = 0.0;
      for (std::size_t m = 0; m < g.rows(); ++m) s += dx(j, m) * u(m, k);
      for (std::size_t m = 0; m < g.cols(); ++m) s += u(j, m) * dy(k, m);
      out(j, k) = s;
    }
  }
  return out;
}

}  // namespace sg::reference
