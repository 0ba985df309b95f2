#include "bruhat/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace bruhat::quadrature {

namespace {

Rule build_rule(int order) {
  Rule r;
  r.nodes.resize(order);
  r.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

double composite(const std::function<double(double)>& f, double a, double b, const Rule& rule, int panels) {
  const double h = (b - a) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
  }
  return 0.5 * h * s;
}

}  // namespace

const Rule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int order, double rel_tol,
                 int max_halvings) {
  const Rule& rule = gauss_legendre(order);
  int panels = 1;
  double prev = composite(f, a, b, rule, panels);
  for (int h = 0; h < max_halvings; ++h) {
    panels *= 2;
    const double cur = composite(f, a, b, rule, panels);
    if (std::abs(cur - prev) <= rel_tol * std::max(std::abs(cur), 1.0)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace bruhat::quadrature
