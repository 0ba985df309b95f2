#include "bruhat/lenard.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "bruhat/error.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/poisson.hpp"
#include "bruhat/quadrature.hpp"

namespace bruhat::lenard {

std::vector<double> apply_theta(std::span<const double> x, std::span<const double> grad_x) {
  const std::size_t n = x.size();
  std::vector<double> out(n);
  // Suffix sums of x_a g_a let each component be formed in O(1).
  double tail = 0.0;
  double c = 0.0;
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t a = n; a-- > 0;) suffix[a] = suffix[a + 1] + x[a] * grad_x[a];
  for (std::size_t i = 0; i < n; ++i) {
    c += x[i];
    tail = suffix[i + 1];
    out[i] = c * grad_x[i] + tail;
  }
  return out;
}

namespace {

void require_torus_invariant(const ScalarField& g) {
  if (!g.torus_invariant) {
    throw Error(ErrorCode::NotTorusInvariant, "Lenard step needs a phi-independent Hamiltonian ('" + g.id + "')");
  }
}

MomentumAnglePoint at_x(std::span<const double> x) {
  MomentumAnglePoint p;
  p.x.assign(x.begin(), x.end());
  p.phi.assign(x.size(), 0.0);
  return p;
}

}  // namespace

std::vector<double> lenard_oneform(const ScalarField& g, const MomentumAnglePoint& point) {
  require_torus_invariant(g);
  return apply_theta(point.x, g.x_grad(point));
}

XOneForm lenard_oneform(const ScalarField& g) {
  require_torus_invariant(g);
  return XOneForm{g.n, [g](std::span<const double> x) { return apply_theta(x, g.x_grad(at_x(x))); }};
}

double closedness_residual(const XOneForm& alpha, const std::vector<std::vector<double>>& samples, double h) {
  double worst = 0.0;
  const int n = alpha.n;
  for (const auto& x0 : samples) {
    // jac(i, j) = d alpha_i / d x_j
    Eigen::MatrixXd jac(n, n);
    std::vector<double> x = x0;
    for (int j = 0; j < n; ++j) {
      const double saved = x[j];
      x[j] = saved + h;
      const auto ap = alpha(x);
      x[j] = saved - h;
      const auto am = alpha(x);
      x[j] = saved;
      for (int i = 0; i < n; ++i) jac(i, j) = (ap[i] - am[i]) / (2.0 * h);
    }
    worst = std::max(worst, (jac - jac.transpose()).cwiseAbs().maxCoeff());
  }
  return worst;
}

ScalarField integrate_potential(const XOneForm& alpha, std::vector<double> base_x,
                                const std::vector<std::vector<double>>& samples, std::string id, double tol) {
  const double residual = closedness_residual(alpha, samples);
  if (!(residual <= tol)) {
    throw Error(ErrorCode::NotClosed, "one-form not closed (residual " + std::to_string(residual) + ")");
  }
  const int n = alpha.n;
  auto value = [alpha, base_x, n](std::span<const double> x) {
    std::vector<double> dir(n);
    for (int i = 0; i < n; ++i) dir[i] = x[i] - base_x[i];
    std::vector<double> y(n);
    auto integrand = [&](double t) {
      for (int i = 0; i < n; ++i) y[i] = base_x[i] + t * dir[i];
      const auto a = alpha(y);
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += a[i] * dir[i];
      return s;
    };
    return quadrature::integrate(integrand, 0.0, 1.0);
  };
  auto gradient = [alpha](std::span<const double> x) { return alpha(x); };
  return torus_field(std::move(id), n, value, gradient);
}

MomentumAnglePoint default_base_point(int n, double margin) {
  std::vector<double> c(n);
  for (int k = 1; k <= n; ++k) c[k - 1] = margin + (1.0 - 2.0 * margin) * (n + 1.0 - k) / (n + 1.0);
  MomentumAnglePoint p;
  p.x = charts::x_from_c(c);
  p.phi.assign(n, 0.0);
  return p;
}

LenardChain lenard_chain(const ScalarField& seed, int K, const MomentumAnglePoint& base_point,
                         const std::vector<std::vector<double>>& samples, double tol) {
  if (K < 1) throw Error(ErrorCode::InvalidArgument, "chain length K must be >= 1");
  require_torus_invariant(seed);
  LenardChain chain;
  chain.base_point = base_point;
  chain.members.push_back(seed);
  for (int j = 1; j < K; ++j) {
    const XOneForm alpha = lenard_oneform(chain.members.back());
    chain.closedness_residuals.push_back(closedness_residual(alpha, samples));
    chain.members.push_back(integrate_potential(alpha, base_point.x, samples,
                                                seed.id + "#" + std::to_string(j + 1), tol));
  }
  return chain;
}

int independence_rank(const std::vector<ScalarField>& fields, const std::vector<MomentumAnglePoint>& points,
                      double rel) {
  if (fields.empty()) return 0;
  int best = 0;
  for (const auto& p : points) {
    const int n = p.n();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(fields.size()), n);
    for (std::size_t r = 0; r < fields.size(); ++r) {
      const auto g = fields[r].x_grad(p);
      for (int i = 0; i < n; ++i) m(static_cast<Eigen::Index>(r), i) = g[i];
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) continue;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (s(i) > rel * s(0)) ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

namespace {

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

double min_gradient_cosine(const ScalarField& a, const ScalarField& b, const std::vector<MomentumAnglePoint>& points) {
  double worst = 1.0;
  for (const auto& p : points) {
    const Eigen::VectorXd ga = to_eigen(a.x_grad(p));
    const Eigen::VectorXd gb = to_eigen(b.x_grad(p));
    worst = std::min(worst, ga.dot(gb) / (ga.norm() * gb.norm()));
  }
  return worst;
}

std::vector<ScalarField> reference_chain(const std::string& seed_id, int n, int K) {
  std::vector<ScalarField> out;
  if (seed_id == "e-sum") {
    for (int k = 1; k <= K; ++k) out.push_back(invariants::power_sum_field(n, k));
  } else if (seed_id == "x-sum") {
    for (int k = 1; k <= K; ++k) {
      out.push_back(torus_field(
          "x-sum^" + std::to_string(k), n,
          [k](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v;
            return std::pow(s, k);
          },
          [k](std::span<const double> x) {
            double s = 0.0;
            for (double v : x) s += v;
            return std::vector<double>(x.size(), k * std::pow(s, k - 1));
          }));
    }
  }
  return out;
}

ChainReport analyze_chain(const LenardChain& chain, const std::vector<MomentumAnglePoint>& points) {
  ChainReport r;
  const auto& members = chain.members;
  r.seed = members.front().id;
  r.K = static_cast<int>(members.size());
  r.residuals = chain.closedness_residuals;
  const int n = members.front().n;
  const auto pi_s = poisson::make_pi_s(n);
  const auto pi_b = poisson::make_pi_inf(n);

  for (std::size_t j = 0; j + 1 < members.size(); ++j) {
    double lo = 0.0;
    double hi = 0.0;
    double sum = 0.0;
    bool first = true;
    for (const auto& p : points) {
      const Eigen::VectorXd a = to_eigen(poisson::hamiltonian_vf(members[j], pi_b, p));
      const Eigen::VectorXd b = to_eigen(poisson::hamiltonian_vf(members[j + 1], pi_s, p));
      const double ratio = a.dot(b) / b.squaredNorm();
      lo = first ? ratio : std::min(lo, ratio);
      hi = first ? ratio : std::max(hi, ratio);
      first = false;
      sum += ratio;
    }
    r.ratios.push_back(points.empty() ? 0.0 : sum / static_cast<double>(points.size()));
    r.ratio_spread.push_back(hi - lo);
  }

  r.rank = independence_rank(members, points);
  for (const auto& p : points) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        r.involution_max = std::max(r.involution_max, std::abs(poisson::bracket(members[i], members[j], pi_s, p)));
        r.involution_max = std::max(r.involution_max, std::abs(poisson::bracket(members[i], members[j], pi_b, p)));
      }
    }
  }

  // Registered seeds are identified by the root of their id.
  const std::string root = r.seed.substr(0, r.seed.find('#'));
  const auto ref = reference_chain(root, n, r.K);
  for (std::size_t k = 0; k < ref.size(); ++k) {
    r.reference_cosine.push_back(min_gradient_cosine(members[k], ref[k], points));
    double scale = 0.0;
    for (const auto& p : points) {
      scale += to_eigen(members[k].x_grad(p)).norm() / to_eigen(ref[k].x_grad(p)).norm();
    }
    r.reference_scale.push_back(points.empty() ? 0.0 : scale / static_cast<double>(points.size()));
  }
  return r;
}

}  // namespace bruhat::lenard
