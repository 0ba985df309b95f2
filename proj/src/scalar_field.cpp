#include "bruhat/scalar_field.hpp"

namespace bruhat {

std::vector<double> ScalarField::grad(const MomentumAnglePoint& p, double h) const {
  if (gradient) return gradient(p);
  return fd_grad(p, h);
}

std::vector<double> ScalarField::fd_grad(const MomentumAnglePoint& p, double h) const {
  auto state = charts::to_state(p);
  std::vector<double> g(state.size(), 0.0);
  for (std::size_t l = 0; l < state.size(); ++l) {
    if (torus_invariant && l % 2 == 1) continue;
    const double saved = state[l];
    state[l] = saved + h;
    const double fp = value(charts::from_state(state));
    state[l] = saved - h;
    const double fm = value(charts::from_state(state));
    state[l] = saved;
    g[l] = (fp - fm) / (2.0 * h);
  }
  return g;
}

std::vector<double> ScalarField::x_grad(const MomentumAnglePoint& p, double h) const {
  const auto g = grad(p, h);
  std::vector<double> out(g.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[2 * i];
  return out;
}

ScalarField torus_field(std::string id, int n, std::function<double(std::span<const double>)> f,
                        std::function<std::vector<double>(std::span<const double>)> dfdx) {
  ScalarField s;
  s.id = std::move(id);
  s.n = n;
  s.torus_invariant = true;
  s.value = [f](const MomentumAnglePoint& p) { return f(p.x); };
  if (dfdx) {
    s.gradient = [dfdx](const MomentumAnglePoint& p) {
      const auto gx = dfdx(p.x);
      std::vector<double> g(2 * gx.size(), 0.0);
      for (std::size_t i = 0; i < gx.size(); ++i) g[2 * i] = gx[i];
      return g;
    };
  }
  return s;
}

ScalarField coordinate_x(int n, int i) {
  return torus_field(
      "x_" + std::to_string(i + 1), n, [i](std::span<const double> x) { return x[i]; },
      [n, i](std::span<const double>) {
        std::vector<double> g(n, 0.0);
        g[i] = 1.0;
        return g;
      });
}

ScalarField coordinate_phi(int n, int i) {
  ScalarField s;
  s.id = "phi_" + std::to_string(i + 1);
  s.n = n;
  s.value = [i](const MomentumAnglePoint& p) { return p.phi[i]; };
  s.gradient = [n, i](const MomentumAnglePoint&) {
    std::vector<double> g(2 * n, 0.0);
    g[2 * i + 1] = 1.0;
    return g;
  };
  return s;
}

}  // namespace bruhat
