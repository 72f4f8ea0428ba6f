#pragma once

#include <vector>

#include "sg/grid.hpp"

namespace sg {

/// Cosine coefficients of a field. On the Regular grid the symmetrising
/// T-scaling is applied first, so that the returned coefficients diagonalise
/// the u-space operator T C Lambda C T^{-1}.
std::vector<double> to_modes(const Field& field);
/// Inverse of to_modes.
Field from_modes(std::vector<double> modes, const GridPtr& grid);

/// Spectral Laplacian D2x u + u D2y^T on either grid family.
Field laplacian(const Field& field);

/// Solves (I - c Lap) w = rhs by dividing each cosine mode by
/// 1 + c (j mu_x)^2 + c (k mu_y)^2. Requires c > 0.
Field helmholtz_solve(const Field& rhs, double c);

}  // namespace sg
