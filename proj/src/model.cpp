#include "sg/model.hpp"

#include "sg/spectral.hpp"

namespace sg {

namespace {

void check(const State& s, const Field& phi, const char* where) {
  require_same_grid(s.u, s.v, where);
  require_same_grid(s.u, phi, where);
}

Field phi_sin(const Field& phi, const Field& u) {
  Field out(u.grid_ptr());
  kernels::phi_sin(u.grid().exec(), phi.values(), u.values(), out.values());
  return out;
}

}  // namespace

double energy(const State& state, const Field& phi) {
  check(state, phi, "energy");
  const Field lap = laplacian(state.u);
  const GridSpec& g = state.u.grid();
  return kernels::energy_terms(g.exec(), g.weights(), state.u.values(), state.v.values(),
                               lap.values(), phi.values())
      .total();
}

std::pair<Field, Field> energy_gradient(const State& state, const Field& phi) {
  check(state, phi, "energy_gradient");
  Field grad_u = phi_sin(phi, state.u);
  grad_u -= laplacian(state.u);
  return {std::move(grad_u), state.v};
}

std::pair<Field, Field> rhs(const State& state, const Field& phi) {
  check(state, phi, "rhs");
  Field dv = laplacian(state.u);
  dv -= phi_sin(phi, state.u);
  return {state.v, std::move(dv)};
}

Field supplementary_g(const State& state, const Field& phi, GChoice choice) {
  check(state, phi, "supplementary_g");
  if (choice == GChoice::G1) return phi_sin(phi, state.u);
  Field g = laplacian(state.u);
  g -= phi_sin(phi, state.u);
  return g;
}

}  // namespace sg
