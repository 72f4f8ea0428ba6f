#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "sg/grid.hpp"

namespace sg {

using Function3D = std::function<double(double x, double y, double t)>;

/// u_tt - Lap u + phi(x,y) sin u = 0 on a rectangle with homogeneous Neumann
/// boundary conditions.
struct SGProblem {
  Domain domain;
  Function2D phi;     // Josephson current density
  Function2D init_u;  // u(x, y, 0)
  Function2D init_v;  // u_t(x, y, 0)
  std::optional<Function3D> exact;
};

/// Discrete energy 1/2 |v|^2 - 1/2 (u, Lap u) + (phi, 1 - cos u), using the
/// inner product of the grid family.
double energy(const State& state, const Field& phi);

/// Variational derivative pair (-Lap u + phi sin u, v) of the discrete energy
/// with respect to the grid inner product.
std::pair<Field, Field> energy_gradient(const State& state, const Field& phi);

/// Semi-discrete right-hand side (v, Lap u - phi sin u).
std::pair<Field, Field> rhs(const State& state, const Field& phi);

/// Supplied function multiplying the supplementary variable.
enum class GChoice {
  G1,  // phi sin u
  G2,  // Lap u - phi sin u
};

Field supplementary_g(const State& state, const Field& phi, GChoice choice);

}  // namespace sg
