#pragma once

// Bivector fields on the momentum-angle chart of the big cell of CP^n.
//
// Coefficient matrices are 2n x 2n, antisymmetric, in the basis
// (x_1, phi_1, ..., x_n, phi_n). A bivector P acts on covectors by
// contraction in its first slot: (i_{df} P)^j = sum_i df_i P^{ij}. With this
// convention {f, g}_P = df^T P dg, X_f = i_{df} P, X_f(g) = {f, g}_P and
// {x_1, phi_1}_{pi_s} = +1, so the Hamiltonian field of x_1 is +d/dphi_1.

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bruhat/charts.hpp"
#include "bruhat/exterior.hpp"
#include "bruhat/scalar_field.hpp"

namespace bruhat::poisson {

enum class DerivativeMode { Analytic, FiniteDifference };

struct DerivativeOptions {
  DerivativeMode mode = DerivativeMode::Analytic;
  double step = kDefaultFdStep;
};

class BivectorField {
 public:
  using CoeffFn = std::function<Eigen::MatrixXd(const MomentumAnglePoint&)>;
  // jac(p)[l] = d P / d s_l where s is the flattened state.
  using JacFn = std::function<std::vector<Eigen::MatrixXd>(const MomentumAnglePoint&)>;

  BivectorField(std::string name, int n, CoeffFn coeff, JacFn jac = {}, bool constant = false);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  bool constant() const { return constant_; }
  bool has_analytic_jacobian() const { return static_cast<bool>(jac_); }

  Eigen::MatrixXd operator()(const MomentumAnglePoint& p) const { return coeff_(p); }

  // Partial derivatives of the coefficient matrix; falls back to central
  // differences when no analytic Jacobian exists or FD is requested.
  std::vector<Eigen::MatrixXd> derivatives(const MomentumAnglePoint& p,
                                           const DerivativeOptions& opt = {}) const;

  exterior::MultiVector as_multivector(const MomentumAnglePoint& p) const;

 private:
  std::string name_;
  int n_;
  CoeffFn coeff_;
  JacFn jac_;
  bool constant_;
};

// Dual of omega = sum dx_i ^ dphi_i.
BivectorField make_pi_s(int n);

// pi_inf = sum_i Theta_i ^ d/dphi_i,
// Theta_i = (x_1 + ... + x_i) d/dx_i + sum_{j>i} x_j d/dx_j.
BivectorField make_pi_inf(int n);

struct PoissonPencil {
  double alpha;  // weight on pi_inf
  double beta;   // weight on pi_s
  BivectorField bruhat;
  BivectorField symplectic;

  PoissonPencil(double alpha, double beta, BivectorField bruhat, BivectorField symplectic);
};

Eigen::MatrixXd pencil_field(const PoissonPencil& p, const MomentumAnglePoint& point);

// The pencil member alpha*pi_inf + beta*pi_s as a field in its own right.
BivectorField as_field(const PoissonPencil& p);

double bracket(const ScalarField& f, const ScalarField& g, const BivectorField& P,
               const MomentumAnglePoint& point, double h = kDefaultFdStep);

std::vector<double> hamiltonian_vf(const ScalarField& f, const BivectorField& P,
                                   const MomentumAnglePoint& point, double h = kDefaultFdStep);

// [P, Q]^{ijk} = sum_l ( P^{li} d_l Q^{jk} + P^{lj} d_l Q^{ki} + P^{lk} d_l Q^{ij}
//                      + Q^{li} d_l P^{jk} + Q^{lj} d_l P^{ki} + Q^{lk} d_l P^{ij} )
exterior::MultiVector schouten(const BivectorField& P, const BivectorField& Q,
                               const MomentumAnglePoint& point,
                               const DerivativeOptions& opt = {});

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} under P; inner brackets differentiated
// by central differences with step `step`.
double jacobiator(const BivectorField& P, const ScalarField& f, const ScalarField& g,
                  const ScalarField& h, const MomentumAnglePoint& point,
                  double step = kDefaultFdStep);

// ---------------------------------------------------------------------------
// pi_inf rebuilt from Lu's complex form i * sum (1+|y_i|^2) d/dy_i ^ d/dybar_i,
// pushed through the chain (Re y, Im y) -> (q, phi) -> (x, phi).

// J P J^T.
Eigen::MatrixXd pushforward(const Eigen::MatrixXd& P, const Eigen::MatrixXd& J);

// Lu's bivector in the real basis (Re y_1, Im y_1, ..., Re y_n, Im y_n).
Eigen::MatrixXd lu_bivector(const charts::LuPoint& y);

// Jacobian of (Re y, Im y) -> (q, phi), block diagonal.
Eigen::MatrixXd jacobian_lu_to_q_phi(const charts::LuPoint& y);

// Jacobian of (q, phi) -> (x, phi); the x-block is dx_a/dq_i.
Eigen::MatrixXd jacobian_q_phi_to_x_phi(const charts::QPoint& q);

// Bivector sign * sum dq_i ^ dphi_i written in the (x, phi) basis.
Eigen::MatrixXd action_angle_in_x(const charts::QPoint& q, double sign);

struct LuRoute {
  Eigen::MatrixXd in_q_phi;  // Lu form expressed in (q, phi)
  Eigen::MatrixXd in_x_phi;  // then in (x, phi)
  double action_angle_sign;  // s with in_q_phi = s * sum dq ^ dphi
};

LuRoute pi_inf_via_lu(const MomentumAnglePoint& point);

}  // namespace bruhat::poisson
