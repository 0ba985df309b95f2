#include "bruhat/charts.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bruhat/error.hpp"

namespace bruhat::charts {

AffinePoint affine_from_homogeneous(const HomogeneousPoint& p, double epsilon) {
  if (p.Z.size() < 2) throw Error(ErrorCode::InvalidArgument, "homogeneous point needs n >= 1");
  if (std::abs(p.Z[0]) <= epsilon) {
    throw Error(ErrorCode::OutsideBigCell, "|Z_0| below epsilon");
  }
  AffinePoint out;
  out.z.reserve(p.Z.size() - 1);
  for (std::size_t i = 1; i < p.Z.size(); ++i) out.z.push_back(p.Z[i] / p.Z[0]);
  return out;
}

HomogeneousPoint homogeneous_from_affine(const AffinePoint& p) {
  HomogeneousPoint out;
  out.Z.reserve(p.z.size() + 1);
  out.Z.emplace_back(1.0, 0.0);
  out.Z.insert(out.Z.end(), p.z.begin(), p.z.end());
  return out;
}

MomentumAnglePoint momentum_from_affine(const AffinePoint& p) {
  const int n = p.n();
  MomentumAnglePoint out;
  out.x.resize(n);
  out.phi.resize(n);
  double total = 1.0;
  for (const auto& zi : p.z) total += std::norm(zi);
  for (int i = 0; i < n; ++i) {
    const double r2 = std::norm(p.z[i]);
    out.x[i] = (i == 0 ? 1.0 : 0.0) - r2 / total;
    out.phi[i] = (r2 == 0.0) ? 0.0 : std::arg(p.z[i]);
  }
  return out;
}

AffinePoint affine_from_momentum(const MomentumAnglePoint& p) {
  validate(p, /*strict=*/false);
  const int n = p.n();
  const auto c = c_from_x(p.x);
  AffinePoint out;
  out.z.resize(n);
  double prev = 1.0;
  for (int k = 0; k < n; ++k) {
    const double r2 = (prev - c[k]) / c[n - 1];
    out.z[k] = std::polar(std::sqrt(std::max(r2, 0.0)), p.phi[k]);
    prev = c[k];
  }
  return out;
}

LuPoint lu_from_affine(const AffinePoint& p) {
  const int n = p.n();
  LuPoint out;
  out.y.resize(n);
  double tail = 1.0;  // 1 + |z_{i+1}|^2 + ... + |z_n|^2
  for (int i = n - 1; i >= 0; --i) {
    out.y[i] = p.z[i] / std::sqrt(tail);
    tail += std::norm(p.z[i]);
  }
  return out;
}

AffinePoint affine_from_lu(const LuPoint& p) {
  const int n = p.n();
  AffinePoint out;
  out.z.resize(n);
  double tail = 1.0;
  for (int i = n - 1; i >= 0; --i) {
    out.z[i] = p.y[i] * std::sqrt(tail);
    tail += std::norm(out.z[i]);
  }
  return out;
}

QPoint q_from_lu(const LuPoint& p) {
  QPoint out;
  out.q.reserve(p.y.size());
  for (const auto& yi : p.y) out.q.push_back(std::log1p(std::norm(yi)));
  return out;
}

std::vector<double> x_from_q(const QPoint& q) {
  const int n = q.n();
  std::vector<double> x(n);
  double prefix = 0.0;
  double prev = 1.0;  // e^{-(q_1 + ... + q_{j-1})}, and 1 before the first
  for (int j = 0; j < n; ++j) {
    prefix += q.q[j];
    const double cur = std::exp(-prefix);
    x[j] = (j == 0) ? cur : cur - prev;
    prev = cur;
  }
  return x;
}

std::vector<double> c_from_x(std::span<const double> x) {
  std::vector<double> c(x.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i];
    c[i] = s;
  }
  return c;
}

std::vector<double> x_from_c(std::span<const double> c) {
  std::vector<double> x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x[i] = (i == 0) ? c[0] : c[i] - c[i - 1];
  return x;
}

double simplex_clearance(std::span<const double> x) {
  const auto c = c_from_x(x);
  if (c.empty()) return 0.0;
  double d = 1.0 - c.front();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) d = std::min(d, c[k] - c[k + 1]);
  return std::min(d, c.back());
}

bool satisfies_invariants(const MomentumAnglePoint& p, bool strict) {
  const int n = p.n();
  if (n < 1 || static_cast<int>(p.phi.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(p.x[i]) || !std::isfinite(p.phi[i])) return false;
  }
  if (!(p.x[0] > 0.0 && p.x[0] <= 1.0)) return false;
  for (int j = 1; j < n; ++j) {
    if (strict ? !(p.x[j] < 0.0) : !(p.x[j] <= 0.0)) return false;
  }
  const auto c = c_from_x(p.x);
  if (!(c.front() < 1.0 || (!strict && c.front() <= 1.0))) return false;
  return c.back() > 0.0;
}

void validate(const MomentumAnglePoint& p, bool strict) {
  if (!satisfies_invariants(p, strict)) {
    throw Error(ErrorCode::InvalidSimplexPoint, "c-chain violates 1 > c_1 >= ... >= c_n > 0");
  }
}

bool angles_equal(double a, double b, double tol) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(a - b, two_pi);
  if (d < 0) d += two_pi;
  return std::min(d, two_pi - d) <= tol;
}

std::vector<double> to_state(const MomentumAnglePoint& p) {
  std::vector<double> s(2 * p.x.size());
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    s[2 * i] = p.x[i];
    s[2 * i + 1] = p.phi[i];
  }
  return s;
}

MomentumAnglePoint from_state(std::span<const double> s) {
  MomentumAnglePoint p;
  const std::size_t n = s.size() / 2;
  p.x.resize(n);
  p.phi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.x[i] = s[2 * i];
    p.phi[i] = s[2 * i + 1];
  }
  return p;
}

PointSampler::PointSampler(int n, std::uint64_t seed, double margin)
    : n_(n), margin_(margin), rng_(seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (!(margin > 0.0 && margin < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "margin must lie in (0, 0.5)");
  }
}

MomentumAnglePoint PointSampler::next() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> c(n_);
  for (;;) {
    for (double& ck : c) ck = margin_ + (1.0 - 2.0 * margin_) * unit(rng_);
    std::sort(c.begin(), c.end(), std::greater<>());
    if (std::adjacent_find(c.begin(), c.end()) == c.end()) break;
  }
  MomentumAnglePoint p;
  p.x = x_from_c(c);
  p.phi.resize(n_);
  for (double& a : p.phi) a = 2.0 * std::numbers::pi * unit(rng_);
  return p;
}

std::vector<MomentumAnglePoint> PointSampler::take(int count) {
  std::vector<MomentumAnglePoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(next());
  return out;
}

MomentumAnglePoint random_point(int n, std::uint64_t seed, double margin) {
  return PointSampler(n, seed, margin).next();
}

}  // namespace bruhat::charts
