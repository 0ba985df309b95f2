#include "bruhat/poisson.hpp"

#include <cmath>
#include <string>

#include "bruhat/error.hpp"

namespace bruhat::poisson {

using charts::phi_index;
using charts::x_index;

BivectorField::BivectorField(std::string name, int n, CoeffFn coeff, JacFn jac, bool constant)
    : name_(std::move(name)), n_(n), coeff_(std::move(coeff)), jac_(std::move(jac)), constant_(constant) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "bivector field needs n >= 1");
}

std::vector<Eigen::MatrixXd> BivectorField::derivatives(const MomentumAnglePoint& p,
                                                        const DerivativeOptions& opt) const {
  const int d = dim();
  if (constant_) return std::vector<Eigen::MatrixXd>(d, Eigen::MatrixXd::Zero(d, d));
  if (opt.mode == DerivativeMode::Analytic && jac_) return jac_(p);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(d);
  auto state = charts::to_state(p);
  for (int l = 0; l < d; ++l) {
    const double saved = state[l];
    state[l] = saved + opt.step;
    const Eigen::MatrixXd plus = coeff_(charts::from_state(state));
    state[l] = saved - opt.step;
    const Eigen::MatrixXd minus = coeff_(charts::from_state(state));
    state[l] = saved;
    out.push_back((plus - minus) / (2.0 * opt.step));
  }
  return out;
}

exterior::MultiVector BivectorField::as_multivector(const MomentumAnglePoint& p) const {
  return exterior::from_antisymmetric<exterior::Contravariant>(coeff_(p));
}

BivectorField make_pi_s(int n) {
  const int d = 2 * n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    m(x_index(i), phi_index(i)) = 1.0;
    m(phi_index(i), x_index(i)) = -1.0;
  }
  return BivectorField(
      "pi_s", n, [m](const MomentumAnglePoint&) { return m; },
      [d](const MomentumAnglePoint&) { return std::vector<Eigen::MatrixXd>(d, Eigen::MatrixXd::Zero(d, d)); },
      /*constant=*/true);
}

BivectorField make_pi_inf(int n) {
  const int d = 2 * n;
  auto coeff = [n, d](const MomentumAnglePoint& p) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
      c += p.x[i];
      // Theta_i = c_i d/dx_i + sum_{a>i} x_a d/dx_a, wedged with d/dphi_i.
      m(x_index(i), phi_index(i)) = c;
      for (int a = i + 1; a < n; ++a) m(x_index(a), phi_index(i)) = p.x[a];
    }
    return Eigen::MatrixXd(m - m.transpose());
  };
  auto jac = [n, d](const MomentumAnglePoint&) {
    std::vector<Eigen::MatrixXd> out(d, Eigen::MatrixXd::Zero(d, d));
    for (int b = 0; b < n; ++b) {
      Eigen::MatrixXd& m = out[x_index(b)];
      for (int i = 0; i < n; ++i) {
        if (b <= i) {
          m(x_index(i), phi_index(i)) = 1.0;
          m(phi_index(i), x_index(i)) = -1.0;
        }
        if (b > i) {
          m(x_index(b), phi_index(i)) = 1.0;
          m(phi_index(i), x_index(b)) = -1.0;
        }
      }
    }
    return out;
  };
  return BivectorField("pi_inf", n, coeff, jac);
}

PoissonPencil::PoissonPencil(double alpha_, double beta_, BivectorField bruhat_, BivectorField symplectic_)
    : alpha(alpha_), beta(beta_), bruhat(std::move(bruhat_)), symplectic(std::move(symplectic_)) {
  if (alpha == 0.0 && beta == 0.0) throw Error(ErrorCode::InvalidArgument, "pencil weights both zero");
  if (bruhat.n() != symplectic.n()) throw Error(ErrorCode::DimensionMismatch, "pencil members differ in n");
}

Eigen::MatrixXd pencil_field(const PoissonPencil& p, const MomentumAnglePoint& point) {
  return p.alpha * p.bruhat(point) + p.beta * p.symplectic(point);
}

BivectorField as_field(const PoissonPencil& p) {
  auto coeff = [p](const MomentumAnglePoint& point) { return pencil_field(p, point); };
  BivectorField::JacFn jac;
  if (p.bruhat.has_analytic_jacobian() && p.symplectic.has_analytic_jacobian()) {
    jac = [p](const MomentumAnglePoint& point) {
      auto a = p.bruhat.derivatives(point);
      const auto b = p.symplectic.derivatives(point);
      for (std::size_t l = 0; l < a.size(); ++l) a[l] = p.alpha * a[l] + p.beta * b[l];
      return a;
    };
  }
  const bool constant = (p.alpha == 0.0 || p.bruhat.constant()) && (p.beta == 0.0 || p.symplectic.constant());
  return BivectorField("pencil(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")",
                       p.bruhat.n(), coeff, jac, constant);
}

namespace {

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void check_dims(const ScalarField& f, const BivectorField& P) {
  if (f.n != P.n()) throw Error(ErrorCode::DimensionMismatch, "field '" + f.id + "' has different n");
}

}  // namespace

double bracket(const ScalarField& f, const ScalarField& g, const BivectorField& P,
               const MomentumAnglePoint& point, double h) {
  check_dims(f, P);
  check_dims(g, P);
  const Eigen::VectorXd df = as_vector(f.grad(point, h));
  const Eigen::VectorXd dg = as_vector(g.grad(point, h));
  return df.dot(P(point) * dg);
}

std::vector<double> hamiltonian_vf(const ScalarField& f, const BivectorField& P,
                                   const MomentumAnglePoint& point, double h) {
  check_dims(f, P);
  const Eigen::VectorXd df = as_vector(f.grad(point, h));
  const Eigen::VectorXd v = P(point).transpose() * df;
  return {v.data(), v.data() + v.size()};
}

exterior::MultiVector schouten(const BivectorField& P, const BivectorField& Q,
                               const MomentumAnglePoint& point, const DerivativeOptions& opt) {
  if (P.n() != Q.n()) throw Error(ErrorCode::DimensionMismatch, "schouten operands differ in n");
  const int d = P.dim();
  const Eigen::MatrixXd p = P(point);
  const Eigen::MatrixXd q = Q(point);
  const auto dp = P.derivatives(point, opt);
  const auto dq = Q.derivatives(point, opt);
  exterior::MultiVector out(d, 3);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        double s = 0.0;
        for (int l = 0; l < d; ++l) {
          s += p(l, i) * dq[l](j, k) + p(l, j) * dq[l](k, i) + p(l, k) * dq[l](i, j);
          s += q(l, i) * dp[l](j, k) + q(l, j) * dp[l](k, i) + q(l, k) * dp[l](i, j);
        }
        out.at((1u << i) | (1u << j) | (1u << k)) = s;
      }
    }
  }
  return out;
}

namespace {

ScalarField bracket_field(const ScalarField& f, const ScalarField& g, const BivectorField& P, double step) {
  ScalarField b;
  b.id = "{" + f.id + "," + g.id + "}";
  b.n = f.n;
  b.value = [f, g, P, step](const MomentumAnglePoint& p) { return bracket(f, g, P, p, step); };
  return b;
}

}  // namespace

double jacobiator(const BivectorField& P, const ScalarField& f, const ScalarField& g,
                  const ScalarField& h, const MomentumAnglePoint& point, double step) {
  return bracket(f, bracket_field(g, h, P, step), P, point, step) +
         bracket(g, bracket_field(h, f, P, step), P, point, step) +
         bracket(h, bracket_field(f, g, P, step), P, point, step);
}

Eigen::MatrixXd pushforward(const Eigen::MatrixXd& P, const Eigen::MatrixXd& J) {
  return J * P * J.transpose();
}

Eigen::MatrixXd lu_bivector(const charts::LuPoint& y) {
  // i (1+|y|^2) d_y ^ d_ybar = -(1+|y|^2)/2 d_u ^ d_v  for y = u + i v.
  const int n = y.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double w = -0.5 * (1.0 + std::norm(y.y[i]));
    m(2 * i, 2 * i + 1) = w;
    m(2 * i + 1, 2 * i) = -w;
  }
  return m;
}

Eigen::MatrixXd jacobian_lu_to_q_phi(const charts::LuPoint& y) {
  const int n = y.n();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const double u = y.y[i].real();
    const double v = y.y[i].imag();
    const double rho2 = u * u + v * v;
    if (rho2 == 0.0) throw Error(ErrorCode::InvalidArgument, "polar chart singular at y_i = 0");
    J(2 * i, 2 * i) = 2.0 * u / (1.0 + rho2);
    J(2 * i, 2 * i + 1) = 2.0 * v / (1.0 + rho2);
    J(2 * i + 1, 2 * i) = -v / rho2;
    J(2 * i + 1, 2 * i + 1) = u / rho2;
  }
  return J;
}

Eigen::MatrixXd jacobian_q_phi_to_x_phi(const charts::QPoint& q) {
  const int n = q.n();
  // c_a = exp(-(q_1 + ... + q_a)), x_a = c_a - c_{a-1}.
  std::vector<double> c(n);
  double s = 0.0;
  for (int a = 0; a < n; ++a) {
    s += q.q[a];
    c[a] = std::exp(-s);
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i <= a; ++i) {
      double v = -c[a];
      if (a > 0 && i <= a - 1) v += c[a - 1];
      J(x_index(a), x_index(i)) = v;
    }
    J(phi_index(a), phi_index(a)) = 1.0;
  }
  return J;
}

Eigen::MatrixXd action_angle_in_x(const charts::QPoint& q, double sign) {
  const int n = q.n();
  Eigen::MatrixXd aa = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    aa(x_index(i), phi_index(i)) = sign;
    aa(phi_index(i), x_index(i)) = -sign;
  }
  return pushforward(aa, jacobian_q_phi_to_x_phi(q));
}

LuRoute pi_inf_via_lu(const MomentumAnglePoint& point) {
  const auto z = charts::affine_from_momentum(point);
  const auto y = charts::lu_from_affine(z);
  const auto q = charts::q_from_lu(y);
  LuRoute r;
  r.in_q_phi = pushforward(lu_bivector(y), jacobian_lu_to_q_phi(y));
  r.action_angle_sign = r.in_q_phi(0, 1);
  r.in_x_phi = pushforward(r.in_q_phi, jacobian_q_phi_to_x_phi(q));
  return r;
}

}  // namespace bruhat::poisson
