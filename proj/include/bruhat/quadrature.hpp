#pragma once

#include <functional>
#include <vector>

namespace bruhat::quadrature {

struct Rule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule with `order` nodes (Newton iteration on P_order).
const Rule& gauss_legendre(int order);

// Composite Gauss-Legendre on [a, b]: panels are halved until two successive
// estimates agree to `rel_tol` (relative, with an absolute floor of rel_tol).
double integrate(const std::function<double(double)>& f, double a, double b, int order = 32,
                 double rel_tol = 1e-10, int max_halvings = 12);

}  // namespace bruhat::quadrature
