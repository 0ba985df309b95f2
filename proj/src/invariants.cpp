#include "bruhat/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bruhat/error.hpp"
#include "bruhat/exterior.hpp"

namespace bruhat::invariants {

using exterior::MultiForm;
using exterior::MultiVector;

std::vector<double> f_family_ratio(const MomentumAnglePoint& p) {
  const int n = p.n();
  const MultiVector pi_s = poisson::make_pi_s(n).as_multivector(p);
  const MultiVector pi_b = poisson::make_pi_inf(n).as_multivector(p);

  std::vector<MultiVector> s_pow;  // pi_s^0 .. pi_s^n
  s_pow.push_back(MultiVector::unit(2 * n));
  for (int k = 1; k <= n; ++k) s_pow.push_back(exterior::wedge(s_pow.back(), pi_s));

  std::vector<double> f(n);
  MultiVector b_pow = MultiVector::unit(2 * n);
  for (int j = 1; j <= n; ++j) {
    b_pow = exterior::wedge(b_pow, pi_b);
    const MultiVector num = exterior::wedge(b_pow, s_pow[n - j]);
    f[j - 1] = exterior::top_ratio(num, s_pow[n]);
  }
  return f;
}

namespace {

MultiForm omega_form(int n) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    w(charts::x_index(i), charts::phi_index(i)) = 1.0;
    w(charts::phi_index(i), charts::x_index(i)) = -1.0;
  }
  return exterior::from_antisymmetric<exterior::Covariant>(w);
}

}  // namespace

double f_pairing(const MomentumAnglePoint& p, int k) {
  const int n = p.n();
  if (k < 0 || k > n) throw Error(ErrorCode::GradeOverflow, "pairing order out of range");
  const MultiVector pi_b = poisson::make_pi_inf(n).as_multivector(p);
  return exterior::pair(exterior::wedge_power(pi_b, k), exterior::wedge_power(omega_form(n), k));
}

std::vector<double> f_family_pairing(const MomentumAnglePoint& p) {
  const int n = p.n();
  const MultiVector pi_b = poisson::make_pi_inf(n).as_multivector(p);
  const MultiForm w = omega_form(n);
  std::vector<double> f(n);
  MultiVector bk = MultiVector::unit(2 * n);
  MultiForm wk = MultiForm::unit(2 * n);
  for (int k = 1; k <= n; ++k) {
    bk = exterior::wedge(bk, pi_b);
    wk = exterior::wedge(wk, w);
    f[k - 1] = exterior::pair(bk, wk);
  }
  return f;
}

std::vector<double> elementary_sym(std::span<const double> c) {
  const std::size_t n = c.size();
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += c[i] * e[k - 1];
  }
  return {e.begin() + 1, e.end()};
}

double power_sum(std::span<const double> c, int k) {
  double s = 0.0;
  for (double ci : c) s += std::pow(ci, k);
  return s;
}

namespace {

// d/dx_a = sum_{j >= a} d/dc_j.
std::vector<double> c_grad_to_x_grad(const std::vector<double>& gc) {
  std::vector<double> gx(gc.size());
  double s = 0.0;
  for (std::size_t a = gc.size(); a-- > 0;) {
    s += gc[a];
    gx[a] = s;
  }
  return gx;
}

}  // namespace

ScalarField elementary_field(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "e_k index out of range");
  return torus_field(
      "e_k:" + std::to_string(k), n,
      [k](std::span<const double> x) { return elementary_sym(charts::c_from_x(x))[k - 1]; },
      [k](std::span<const double> x) {
        const auto c = charts::c_from_x(x);
        std::vector<double> gc(c.size());
        std::vector<double> rest;
        for (std::size_t j = 0; j < c.size(); ++j) {
          rest.assign(c.begin(), c.end());
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
          gc[j] = (k == 1) ? 1.0 : elementary_sym(rest)[k - 2];
        }
        return c_grad_to_x_grad(gc);
      });
}

ScalarField power_sum_field(int n, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "p_k index must be >= 1");
  return torus_field(
      "p_k:" + std::to_string(k), n,
      [k](std::span<const double> x) { return power_sum(charts::c_from_x(x), k); },
      [k](std::span<const double> x) {
        const auto c = charts::c_from_x(x);
        std::vector<double> gc(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) gc[j] = k * std::pow(c[j], k - 1);
        return c_grad_to_x_grad(gc);
      });
}

ScalarField e_sum_field(int n) {
  auto f = torus_field(
      "e-sum", n,
      [n](std::span<const double> x) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += (n - i) * x[i];
        return s;
      },
      [n](std::span<const double>) {
        std::vector<double> g(n);
        for (int i = 0; i < n; ++i) g[i] = n - i;
        return g;
      });
  return f;
}

ScalarField x_sum_field(int n) {
  return torus_field(
      "x-sum", n,
      [n](std::span<const double> x) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += x[i];
        return s;
      },
      [n](std::span<const double>) { return std::vector<double>(n, 1.0); });
}

ElementaryReport verify_elementary_theorem(const std::vector<MomentumAnglePoint>& points, double tol) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two sample points");
  const int n = points.front().n();
  ElementaryReport r;
  r.n = n;
  r.samples = static_cast<int>(points.size());

  auto summarize = [&](const std::vector<std::vector<double>>& ratios, std::vector<double>& mean,
                       std::vector<double>& spread) {
    mean.assign(n, 0.0);
    spread.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
      double lo = ratios[0][k];
      double hi = lo;
      double s = 0.0;
      for (const auto& row : ratios) {
        lo = std::min(lo, row[k]);
        hi = std::max(hi, row[k]);
        s += row[k];
      }
      mean[k] = s / static_cast<double>(ratios.size());
      spread[k] = (hi - lo) / std::abs(mean[k]);
    }
  };

  std::vector<std::vector<double>> ratio_rows;
  std::vector<std::vector<double>> pairing_rows;
  for (const auto& p : points) {
    if (p.n() != n) throw Error(ErrorCode::DimensionMismatch, "sample points differ in n");
    const auto e = elementary_sym(charts::c_from_x(p.x));
    const auto fr = f_family_ratio(p);
    const auto fp = f_family_pairing(p);
    std::vector<double> a(n);
    std::vector<double> b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = e[k] / fr[k];
      b[k] = e[k] / fp[k];
    }
    ratio_rows.push_back(std::move(a));
    pairing_rows.push_back(std::move(b));
  }
  summarize(ratio_rows, r.constants, r.spread);
  summarize(pairing_rows, r.pairing_constants, r.pairing_spread);

  r.binomial_hypothesis = true;
  for (int k = 1; k <= n; ++k) {
    const double expected = static_cast<double>(exterior::binomial(n, k));
    if (std::abs(r.constants[k - 1] - expected) > tol * expected * 10.0) r.binomial_hypothesis = false;
  }
  for (int k = 0; k < n; ++k) {
    if (!(r.spread[k] < tol) || !(r.pairing_spread[k] < tol)) {
      throw Error(ErrorCode::NonconstantRatio,
                  "ratio e_" + std::to_string(k + 1) + "/f_" + std::to_string(k + 1) + " varies across points");
    }
  }
  return r;
}

InvolutionReport involution_suite(const std::vector<MomentumAnglePoint>& points,
                                  const std::vector<std::pair<double, double>>& pencils) {
  InvolutionReport r;
  if (points.empty()) return r;
  const int n = points.front().n();
  r.n = n;
  const auto pi_s = poisson::make_pi_s(n);
  const auto pi_b = poisson::make_pi_inf(n);
  std::vector<poisson::BivectorField> members;
  for (const auto& [a, b] : pencils) members.push_back(poisson::as_field(poisson::PoissonPencil(a, b, pi_b, pi_s)));

  std::vector<ScalarField> f;
  for (int k = 1; k <= n; ++k) f.push_back(elementary_field(n, k));

  for (const auto& p : points) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        r.max_bracket_s = std::max(r.max_bracket_s, std::abs(poisson::bracket(f[i], f[j], pi_s, p)));
        r.max_bracket_b = std::max(r.max_bracket_b, std::abs(poisson::bracket(f[i], f[j], pi_b, p)));
        for (const auto& m : members) {
          r.max_bracket_pencil = std::max(r.max_bracket_pencil, std::abs(poisson::bracket(f[i], f[j], m, p)));
        }
      }
    }
  }
  return r;
}

Eigen::MatrixXd recursion_operator(const MomentumAnglePoint& p) {
  const int n = p.n();
  const Eigen::MatrixXd ps = poisson::make_pi_s(n)(p);
  const Eigen::MatrixXd pb = poisson::make_pi_inf(n)(p);
  // omega_flat as the inverse of the sharp map of pi_s (sharp = P^T).
  const Eigen::MatrixXd omega = ps.transpose().inverse();
  return pb.transpose() * omega;
}

std::vector<double> recursion_traces(const MomentumAnglePoint& p, int kmax) {
  const Eigen::MatrixXd N = recursion_operator(p);
  std::vector<double> t;
  Eigen::MatrixXd Nk = Eigen::MatrixXd::Identity(N.rows(), N.cols());
  for (int k = 0; k <= kmax; ++k) {
    t.push_back(Nk.trace());
    Nk = Nk * N;
  }
  return t;
}

}  // namespace bruhat::invariants
