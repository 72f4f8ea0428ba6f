#include "sg/spectral.hpp"

#include <cmath>

#include "sg/errors.hpp"

namespace sg {

std::vector<double> to_modes(const Field& field) {
  const GridSpec& g = field.grid();
  std::vector<double> data = field.data();
  const Exec e = g.exec();
  if (g.family() == GridFamily::Regular) {
    kernels::scale_outer(e, data, g.plan_x().t_scale(), g.plan_y().t_scale(), /*divide=*/true);
  }
  kernels::transform_rows(e, data, g.rows(), g.cols(), g.plan_y(), kernels::Direction::Forward);
  kernels::transform_cols(e, data, g.rows(), g.cols(), g.plan_x(), kernels::Direction::Forward);
  return data;
}

Field from_modes(std::vector<double> modes, const GridPtr& grid) {
  const GridSpec& g = *grid;
  if (modes.size() != g.size()) throw DimensionError("from_modes: coefficient count mismatch");
  const Exec e = g.exec();
  kernels::transform_cols(e, modes, g.rows(), g.cols(), g.plan_x(), kernels::Direction::Inverse);
  kernels::transform_rows(e, modes, g.rows(), g.cols(), g.plan_y(), kernels::Direction::Inverse);
  if (g.family() == GridFamily::Regular) {
    kernels::scale_outer(e, modes, g.plan_x().t_scale(), g.plan_y().t_scale(), /*divide=*/false);
  }
  return Field(grid, std::move(modes));
}

Field laplacian(const Field& field) {
  std::vector<double> modes = to_modes(field);
  kernels::multiply(field.grid().exec(), modes, field.grid().laplacian_symbol());
  return from_modes(std::move(modes), field.grid_ptr());
}

Field helmholtz_solve(const Field& rhs, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ArgumentError("helmholtz_solve: shift c must be positive and finite");
  }
  const GridSpec& g = rhs.grid();
  std::vector<double> inverse_symbol(g.size());
  const auto& symbol = g.laplacian_symbol();
  for (std::size_t i = 0; i < symbol.size(); ++i) inverse_symbol[i] = 1.0 / (1.0 - c * symbol[i]);

  std::vector<double> modes = to_modes(rhs);
  kernels::multiply(g.exec(), modes, inverse_symbol);
  return from_modes(std::move(modes), rhs.grid_ptr());
}

}  // namespace sg
