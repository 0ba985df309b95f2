#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bruhat/charts.hpp"

namespace bruhat {

using charts::MomentumAnglePoint;

inline constexpr double kDefaultFdStep = 1e-5;

// A real function on the momentum-angle chart. Gradients are returned in the
// flattened basis order (x_1, phi_1, ..., x_n, phi_n).
struct ScalarField {
  std::string id;
  int n = 0;
  std::function<double(const MomentumAnglePoint&)> value;
  std::function<std::vector<double>(const MomentumAnglePoint&)> gradient;  // optional
  bool torus_invariant = false;

  double operator()(const MomentumAnglePoint& p) const { return value(p); }

  bool has_gradient() const { return static_cast<bool>(gradient); }

  // Analytic gradient when available, central differences otherwise.
  std::vector<double> grad(const MomentumAnglePoint& p, double h = kDefaultFdStep) const;

  // Central-difference gradient regardless of the analytic one.
  std::vector<double> fd_grad(const MomentumAnglePoint& p, double h = kDefaultFdStep) const;

  // The x-block of grad().
  std::vector<double> x_grad(const MomentumAnglePoint& p, double h = kDefaultFdStep) const;
};

// Torus-invariant field defined by a function of x and its x-gradient.
ScalarField torus_field(std::string id, int n, std::function<double(std::span<const double>)> f,
                        std::function<std::vector<double>(std::span<const double>)> dfdx = {});

ScalarField coordinate_x(int n, int i);
ScalarField coordinate_phi(int n, int i);

}  // namespace bruhat
